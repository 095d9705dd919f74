#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz_sos/certificate.hpp"
#include "hurwitz_sos/complex_matrix.hpp"
#include "hurwitz_sos/trace_polynomial.hpp"

namespace hsos::numeric {

/// Tr of the product of A's and B's spelled by `w`.
Complex word_trace(const Word& w, const ComplexMatrix& a, const ComplexMatrix& b);

/// Brute force Tr S_{p,r}(A, B): all C(p, r) words multiplied out one by one.
double trace_hurwitz_numeric(const ComplexMatrix& a, const ComplexMatrix& b, int p, int r);

/// sum_k coeff_k Tr(class_k) with one representative trace per class.
Complex trace_polynomial_numeric(const TracePolynomial& t, const ComplexMatrix& a, const ComplexMatrix& b);

/// sum over blocks and Gram factors of ||C_l||_F^2 with a = sqrt(A), b = sqrt(B).
double eval_certificate_numeric(const Certificate& cert, const ComplexMatrix& a, const ComplexMatrix& b);

/// (Tr S_{p,0}, ..., Tr S_{p,p}).
std::vector<double> bmv_coefficients(const ComplexMatrix& a, const ComplexMatrix& b, int p);

/// |x - y| <= tol (1 + |y|)
inline bool close_rel(double x, double y, double tol) {
  const double d = x > y ? x - y : y - x;
  return d <= tol * (1.0 + (y < 0 ? -y : y));
}

struct TrialConfig {
  std::uint64_t seed = 0;
  std::vector<std::size_t> n_values{1, 2, 3, 4, 5, 6};
  int trials = 100;
  double tol_rel = 1e-8;

  void validate() const;
};

/// The (A, B) pair used by trial `trial_seed`.
struct TrialPair {
  ComplexMatrix a;
  ComplexMatrix b;
};
TrialPair trial_matrices(std::size_t n, std::uint64_t trial_seed);

struct TrialRecord {
  int p = 0;
  int r = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string kind;  // "random", "identity" or "scalar"
  double oracle = 0.0;
  double certificate = 0.0;
  double abs_diff = 0.0;
  bool pass = false;
};

/// Certificate value versus brute force on `trials` seeded pairs per dimension
/// (seed + running trial index), plus A = B = I_n per dimension and A = [2], B = [3].
std::vector<TrialRecord> run_certificate_trials(const Certificate& cert, const TrialConfig& config);

struct BmvRecord {
  int p = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<double> coefficients;
  bool pass = false;
};

/// Pass iff every coefficient >= -tol (1 + max |coefficient|).
std::vector<BmvRecord> run_bmv_trials(int p, const TrialConfig& config, double tol = 1e-9);

}  // namespace hsos::numeric
