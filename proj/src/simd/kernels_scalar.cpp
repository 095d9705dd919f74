#include "hurwitz_sos/simd/kernels.hpp"

namespace hsos::simd {

namespace {

void matmul_scalar(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real();
      const double ai = a[i * n + k].imag();
      const Complex* brow = b + k * n;
      Complex* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] = Complex(crow[j].real() + (ar * br - ai * bi), crow[j].imag() + (ar * bi + ai * br));
      }
    }
  }
}

double norm_sq_scalar(const Complex* x, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", matmul_scalar, norm_sq_scalar, axpy_scalar};
  return table;
}

}  // namespace hsos::simd
