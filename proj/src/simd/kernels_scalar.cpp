#include "wignerlab/simd/kernels.hpp"

namespace wignerlab::simd {
namespace {

Complex cdotc_scalar(std::size_t n, const Complex* x, const Complex* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

Complex cdotu_scalar(std::size_t n, const Complex* x, const Complex* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void caxpy_scalar(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = {y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr};
  }
}

void cher2_row_scalar(std::size_t n, Complex a, const Complex* x, Complex b, const Complex* z,
                      Complex* y) {
  const double ar = a.real();
  const double ai = a.imag();
  const double br = b.real();
  const double bi = b.imag();
  for (std::size_t i = 0; i < n; ++i) {
    // a * conj(x) = (ar xr + ai xi) + i (ai xr - ar xi)
    const double re = ar * x[i].real() + ai * x[i].imag() + br * z[i].real() + bi * z[i].imag();
    const double im = ai * x[i].real() - ar * x[i].imag() + bi * z[i].real() - br * z[i].imag();
    y[i] = {y[i].real() - re, y[i].imag() - im};
  }
}

void drot_scalar(std::size_t n, double* x, double* y, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

ResolventSum resolvent_sum_scalar(std::size_t n, const double* mu, double energy, double eta) {
  ResolventSum sum;
  const double eta2 = eta * eta;
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = mu[i] - energy;
    const double inv = 1.0 / (diff * diff + eta2);
    sum.re += diff * inv;
    sum.im += eta * inv;
  }
  return sum;
}

void coefficients_scalar(std::size_t n, const double* lambda, double energy, double eps,
                         double dim, double* c, double* d, double* c_prime, double* d_prime) {
  const double eps2 = eps * eps;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = dim * (lambda[i] - energy);
    const double y2 = y * y;
    const double q = y2 + eps2;
    const double q2 = q * q;
    c[i] = eps / q;
    d[i] = y / q;
    c_prime[i] = 2.0 * eps * dim * y / q2;
    d_prime[i] = dim * (y2 - eps2) / q2;
  }
}

constexpr KernelTable kScalar{
    "scalar",         cdotc_scalar,          cdotu_scalar,        caxpy_scalar,
    cher2_row_scalar, drot_scalar,           resolvent_sum_scalar, coefficients_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace wignerlab::simd
