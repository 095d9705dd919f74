#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz_sos/gaussian_rational.hpp"
#include "hurwitz_sos/trace_polynomial.hpp"
#include "hurwitz_sos/word.hpp"

namespace hsos {

/// Hermitian square root of a full letter: a*a = A, b*b = B.
enum class HalfLetter : char { a = 'a', b = 'b' };

inline Letter square(HalfLetter h) { return h == HalfLetter::a ? Letter::A : Letter::B; }
inline HalfLetter swap_half(HalfLetter h) { return h == HalfLetter::a ? HalfLetter::b : HalfLetter::a; }

/// Ansatz shape for C = sum_j c_j * prefix . W_j . suffix.
///
/// The prefix and suffix are optional half letters; the core words W_j are over
/// full letters and all share one length m, so every product word
/// W_j . suffix^2 . reverse(W_k) . prefix^2 has length 2m + #half-letters.
struct SandwichBlock {
  std::optional<HalfLetter> prefix;
  std::optional<HalfLetter> suffix;
  std::vector<Word> basis;

  /// Throws StructureError for an empty basis, unequal core lengths or repeated words.
  void validate() const;

  std::size_t core_length() const { return basis.empty() ? 0 : basis.front().size(); }
  std::size_t product_length() const;
  /// Number of B's in the product word of (j, k) = j's B's + k's B's + half-letter b's.
  std::size_t product_b_count(std::size_t j, std::size_t k) const;
  /// Human readable form, e.g. "b.{AAB,ABA,BAA}".
  std::string describe() const;

  friend bool operator==(const SandwichBlock&, const SandwichBlock&) = default;
};

/// Dense square matrix of Gaussian rationals indexed by a block's basis.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  GramMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  std::size_t dim() const { return dim_; }
  GaussianRational& operator()(std::size_t j, std::size_t k) { return entries_[j * dim_ + k]; }
  const GaussianRational& operator()(std::size_t j, std::size_t k) const { return entries_[j * dim_ + k]; }

  bool is_hermitian() const;
  bool is_zero() const;
  bool is_real() const;

  GramMatrix& operator+=(const GramMatrix& o);
  GramMatrix& operator*=(const GaussianRational& s);
  friend GramMatrix operator+(GramMatrix a, const GramMatrix& b) { return a += b; }
  friend GramMatrix operator*(GramMatrix a, const GaussianRational& s) { return a *= s; }

  /// v* G v, exact.
  GaussianRational quadratic_form(const std::vector<GaussianRational>& v) const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianRational> entries_;
};

struct CertificateBlock {
  SandwichBlock shape;
  GramMatrix gram;
  friend bool operator==(const CertificateBlock&, const CertificateBlock&) = default;
};

struct Certificate {
  int p = 0;
  int r = 0;
  std::vector<CertificateBlock> blocks;

  /// Throws StructureError when a Gram dimension, degree or B count is inconsistent.
  void validate() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct PsdResult {
  bool psd = false;
  /// Present iff !psd; satisfies witness* G witness < 0 exactly.
  std::optional<std::vector<GaussianRational>> witness;
  /// Real pivots of the pivoted LDL* elimination, in elimination order.
  std::vector<Rational> pivots;
};

struct VerifyReport {
  bool matched = false;
  bool psd = false;
  TracePolynomial residual{0};
  std::optional<std::vector<GaussianRational>> witness;
  std::optional<std::size_t> witness_block;
  std::optional<Rational> witness_value;

  bool ok() const { return matched && psd; }
};

/// Class of Tr(u_j u_k*) for u = prefix . W . suffix.
CyclicClass reduce_pair(const SandwichBlock& block, std::size_t j, std::size_t k);

/// sum_{j,k} G[j][k] * reduce_pair(block, j, k).
TracePolynomial expand_gram(const SandwichBlock& block, const GramMatrix& gram);

/// G = sum_l v_l v_l*.
GramMatrix gram_from_vectors(const std::vector<std::vector<GaussianRational>>& vectors);

/// Exact PSD test by symmetric pivoted elimination over Gaussian rationals.
/// Throws StructureError for non-Hermitian input.
PsdResult psd_check_exact(const GramMatrix& gram);

/// Exact check that the blocks expand to Tr S_{p,r} and every Gram matrix is PSD.
/// Structural problems throw StructureError rather than failing verification.
VerifyReport verify_certificate(const Certificate& cert);
/// Same, against an arbitrary degree-p target.
VerifyReport verify_against(const Certificate& cert, const TracePolynomial& target);

/// The same certificate after A <-> B (a <-> b); certifies Tr S_{p, p-r}.
Certificate swap_certificate(const Certificate& cert);
SandwichBlock swap_block(const SandwichBlock& block);

}  // namespace hsos
