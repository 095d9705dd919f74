#include "hurwitz_sos/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hurwitz_sos/error.hpp"

namespace hsos::numeric {

namespace {

double off_diagonal_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (i != j) s += std::norm(h(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h, double tol) {
  const std::size_t n = h.dim();
  if (!h.all_finite()) throw InvalidInput("hermitian_eig: matrix has non-finite entries");
  const double scale = h.frobenius_norm();
  if ((h - h.adjoint()).frobenius_norm() > tol * scale) {
    throw InvalidInput("hermitian_eig: matrix is not Hermitian");
  }

  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);
  EigResult result;

  const double target = tol * scale;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep == kMaxJacobiSweeps) {
      throw ConvergenceError("hermitian_eig: no convergence after " + std::to_string(kMaxJacobiSweeps) +
                             " sweeps, off-diagonal residual " + std::to_string(off_diagonal_norm(a)));
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        // Phase e^{-i phi} on column q makes the pivot real, then a real rotation zeroes it.
        const Complex phase = std::conj(g) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // W restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const Complex wpp = c;
        const Complex wpq = s;
        const Complex wqp = -s * phase;
        const Complex wqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * wpp + akq * wqp;
          a(k, q) = akp * wpq + akq * wqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(wpp) * apk + std::conj(wqp) * aqk;
          a(q, k) = std::conj(wpq) * apk + std::conj(wqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * wpp + vkq * wqp;
          v(k, q) = vkp * wpq + vkq * wqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  result.eigenvalues.resize(n);
  result.vectors = ComplexMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    result.eigenvalues[col] = a(order[col], order[col]).real();
    for (std::size_t k = 0; k < n; ++k) result.vectors(k, col) = v(k, order[col]);
  }
  result.sweeps = sweep;
  return result;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double tol_neg) {
  if (tol_neg < 0) tol_neg = 1e-9 * a.frobenius_norm();
  const EigResult eig = hermitian_eig(a);
  const std::size_t n = a.dim();
  if (n > 0 && eig.eigenvalues.front() < -tol_neg) {
    throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(eig.eigenvalues.front()) + " below -" +
                      std::to_string(tol_neg));
  }
  ComplexMatrix out(n);
  for (std::size_t l = 0; l < n; ++l) {
    const double root = std::sqrt(std::max(eig.eigenvalues[l], 0.0));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = eig.vectors(i, l) * root;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.vectors(j, l));
    }
  }
  return hermitian_part(out);
}

GaussianSource::GaussianSource(std::uint64_t seed) : engine_(seed) {}

double GaussianSource::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

ComplexMatrix random_psd(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("random_psd: dimension must be at least 1");
  GaussianSource gauss(seed);
  ComplexMatrix r(n);
  const double s = std::sqrt(0.5);
  for (auto& z : r.data()) {
    const double re = gauss.next();
    const double im = gauss.next();
    z = Complex(s * re, s * im);
  }
  return hermitian_part(r.adjoint() * r);
}

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("random_hermitian: dimension must be at least 1");
  GaussianSource gauss(seed);
  ComplexMatrix x(n);
  for (auto& z : x.data()) {
    const double re = gauss.next();
    const double im = gauss.next();
    z = Complex(re, im);
  }
  return hermitian_part(x);
}

}  // namespace hsos::numeric
