#include <immintrin.h>

#include "hurwitz_sos/simd/kernels.hpp"

namespace hsos::simd {

namespace {

// Two complex doubles per __m256d: [re0, im0, re1, im1].

// alpha * x for a broadcast complex alpha.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, swapped));
}

void matmul_avx2(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
  auto* cd = reinterpret_cast<double*>(c);
  const auto* bd = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  const std::size_t vec_end = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cd + 2 * i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      const __m256d ar = _mm256_set1_pd(aik.real());
      const __m256d ai = _mm256_set1_pd(aik.imag());
      const double* brow = bd + 2 * k * n;
      std::size_t j = 0;
      for (; j < vec_end; j += 2) {
        __m256d acc = _mm256_loadu_pd(crow + 2 * j);
        acc = _mm256_add_pd(acc, cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * j)));
        _mm256_storeu_pd(crow + 2 * j, acc);
      }
      for (; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += aik.real() * br - aik.imag() * bi;
        crow[2 * j + 1] += aik.real() * bi + aik.imag() * br;
      }
    }
  }
}

double norm_sq_avx2(const Complex* x, std::size_t len) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const std::size_t doubles = 2 * len;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= doubles; i += 4) {
    const __m256d v = _mm256_loadu_pd(xd + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < doubles; ++i) s += xd[i] * xd[i];
  return s;
}

void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t len) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    const __m256d prod = cmul_broadcast(ar, ai, _mm256_loadu_pd(xd + 2 * j));
    _mm256_storeu_pd(yd + 2 * j, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * j), prod));
  }
  for (; j < len; ++j) y[j] += alpha * x[j];
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", matmul_avx2, norm_sq_avx2, axpy_avx2};
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &table : nullptr;
}

}  // namespace hsos::simd
