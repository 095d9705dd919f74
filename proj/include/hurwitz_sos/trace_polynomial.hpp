#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "hurwitz_sos/gaussian_rational.hpp"
#include "hurwitz_sos/word.hpp"

namespace hsos {

/// Linear combination of traces of words, one term per cyclic class.
/// All classes have length `degree()`; zero coefficients are never stored.
class TracePolynomial {
 public:
  using Terms = std::map<CyclicClass, GaussianRational>;

  explicit TracePolynomial(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of `c` (zero when absent).
  GaussianRational coefficient(const CyclicClass& c) const;
  GaussianRational coefficient(std::string_view word) const;

  /// Adds `coeff` to the class of `c`, dropping the entry if it cancels.
  void add(const CyclicClass& c, const GaussianRational& coeff);

  /// Sum of all coefficients.
  GaussianRational total() const;

  TracePolynomial& operator+=(const TracePolynomial& o);
  TracePolynomial& operator-=(const TracePolynomial& o);
  TracePolynomial& operator*=(const GaussianRational& s);
  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }

  /// Equality of term maps. Two empty polynomials compare equal regardless of degree.
  friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void check_degree(const CyclicClass& c) const;

  std::size_t degree_;
  Terms terms_;
};

/// Tr S_{p,r}: every arrangement of r B's among p letters, grouped by rotation class.
TracePolynomial hurwitz_expand(int p, int r);

/// Applies A <-> B to every class and re-canonicalizes; coefficients unchanged.
TracePolynomial swap_letters(const TracePolynomial& t);

/// Binomial coefficient for small arguments.
unsigned long long binomial(int n, int k);

}  // namespace hsos
