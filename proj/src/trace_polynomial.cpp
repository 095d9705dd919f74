#include "hurwitz_sos/trace_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz_sos/error.hpp"

namespace hsos {

GaussianRational TracePolynomial::coefficient(const CyclicClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational TracePolynomial::coefficient(std::string_view word) const {
  return coefficient(canonical_rotation(word));
}

void TracePolynomial::check_degree(const CyclicClass& c) const {
  if (c.length() != degree_) {
    throw StructureError("class " + c.str() + " has length " + std::to_string(c.length()) +
                         ", polynomial degree is " + std::to_string(degree_));
  }
}

void TracePolynomial::add(const CyclicClass& c, const GaussianRational& coeff) {
  check_degree(c);
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational TracePolynomial::total() const {
  GaussianRational s;
  for (const auto& [c, v] : terms_) s += v;
  return s;
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
  for (const auto& [c, v] : o.terms_) add(c, v);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
  for (const auto& [c, v] : o.terms_) add(c, -v);
  return *this;
}

TracePolynomial& TracePolynomial::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, v] : terms_) v *= s;
  return *this;
}

std::string TracePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << v << ")*Tr(" << c.str() << ')';
  }
  return os.str();
}

TracePolynomial hurwitz_expand(int p, int r) {
  if (p < 1) throw InvalidInput("p must be positive, got " + std::to_string(p));
  if (r < 0 || r > p) {
    throw InvalidInput("r must lie in [0, " + std::to_string(p) + "], got " + std::to_string(r));
  }
  TracePolynomial out(static_cast<std::size_t>(p));
  // next_permutation over the sorted arrangement visits each distinct word once.
  std::string s(static_cast<std::size_t>(p - r), 'A');
  s.append(static_cast<std::size_t>(r), 'B');
  std::map<CyclicClass, long> counts;
  do {
    ++counts[canonical_rotation(s)];
  } while (std::next_permutation(s.begin(), s.end()));
  for (const auto& [c, n] : counts) out.add(c, GaussianRational(n));
  return out;
}

TracePolynomial swap_letters(const TracePolynomial& t) {
  TracePolynomial out(t.degree());
  for (const auto& [c, v] : t.terms()) out.add(canonical_rotation(c.representative().swapped()), v);
  return out;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return b;
}

}  // namespace hsos
