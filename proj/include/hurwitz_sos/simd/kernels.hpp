#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace hsos::simd {

using Complex = std::complex<double>;

// Inner loops of the numeric path. Every backend computes the same thing;
// the scalar table is the reference the vector variants are tested against.
struct KernelTable {
  std::string_view name;
  /// c = a * b for n x n row-major matrices. c must not alias a or b.
  void (*matmul)(const Complex* a, const Complex* b, Complex* c, std::size_t n);
  /// sum |x_i|^2
  double (*norm_sq)(const Complex* x, std::size_t len);
  /// y += alpha * x
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t len);
};

const KernelTable& scalar_kernels();
/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();

/// Selected once: HURWITZ_SOS_SIMD=scalar forces the reference kernels,
/// otherwise the widest backend the CPU supports.
const KernelTable& active_kernels();

}  // namespace hsos::simd
