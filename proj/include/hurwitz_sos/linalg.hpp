#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hurwitz_sos/complex_matrix.hpp"

namespace hsos::numeric {

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix vectors;            // column i pairs with eigenvalues[i]
  int sweeps = 0;
};

inline constexpr double kDefaultEigTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 30;

/// Cyclic complex Jacobi, stopping once the off-diagonal Frobenius norm is at
/// most tol * ||H||_F. Throws InvalidInput when ||H - H*||_F > tol ||H||_F and
/// ConvergenceError after 30 sweeps.
EigResult hermitian_eig(const ComplexMatrix& h, double tol = kDefaultEigTol);

/// Hermitian PSD square root V sqrt(max(L, 0)) V*. `tol_neg` < 0 selects the
/// default 1e-9 ||A||_F; eigenvalues below -tol_neg raise NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, double tol_neg = -1.0);

/// Seeded standard normal source: mt19937_64 uniforms fed through Box-Muller,
/// so streams are reproducible across standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed);
  double next();
  /// Uniform in (0, 1).
  double uniform();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// R* R with R having independent standard complex Gaussian entries
/// (real and imaginary parts N(0, 1/2)).
ComplexMatrix random_psd(std::size_t n, std::uint64_t seed);

/// (X + X*) / 2 with X Gaussian; used by self-checks.
ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed);

}  // namespace hsos::numeric
