#pragma once

// Inner-loop kernels shared by the eigensolver and the spectral statistics.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2+FMA variant. The active table is chosen once per process from the
// CPU features (override with WIGNERLAB_SIMD=scalar|avx2). Both tables are
// always reachable by name so the equivalence tests can compare them.

#include <complex>
#include <cstddef>
#include <string_view>

namespace wignerlab::simd {

using Complex = std::complex<double>;

struct ResolventSum {
  double re = 0.0;  // sum (mu - E) / ((mu - E)^2 + eta^2)
  double im = 0.0;  // sum eta / ((mu - E)^2 + eta^2)
};

struct KernelTable {
  std::string_view name;

  /// sum conj(x_i) * y_i
  Complex (*cdotc)(std::size_t n, const Complex* x, const Complex* y);
  /// sum x_i * y_i
  Complex (*cdotu)(std::size_t n, const Complex* x, const Complex* y);
  /// y += alpha * x
  void (*caxpy)(std::size_t n, Complex alpha, const Complex* x, Complex* y);
  /// y -= a * conj(x) + b * conj(z); one row of a Hermitian rank-2 update.
  void (*cher2_row)(std::size_t n, Complex a, const Complex* x, Complex b, const Complex* z,
                    Complex* y);
  /// Plane rotation (x, y) <- (c x - s y, s x + c y).
  void (*drot)(std::size_t n, double* x, double* y, double c, double s);
  /// Resolvent sum over a real spectrum at z = E + i eta.
  ResolventSum (*resolvent_sum)(std::size_t n, const double* mu, double energy, double eta);
  /// Schur-complement coefficients for every minor eigenvalue:
  /// y = N (lambda - E), q = y^2 + eps^2,
  /// c = eps / q, d = y / q, c' = 2 eps N y / q^2, d' = N (y^2 - eps^2) / q^2.
  void (*coefficients)(std::size_t n, const double* lambda, double energy, double eps,
                       double dim, double* c, double* d, double* c_prime, double* d_prime);
};

const KernelTable& scalar_kernels() noexcept;

/// The AVX2 table, or nullptr when not compiled in or unsupported by the CPU.
const KernelTable* avx2_kernels() noexcept;

/// Table selected for this process.
const KernelTable& active() noexcept;

}  // namespace wignerlab::simd
