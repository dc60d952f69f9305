// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "wignerlab/simd/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace wignerlab::simd {
namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// Swap re/im within each complex: [a, b, c, d] -> [b, a, d, c].
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline void store4(__m256d v, double out[4]) { _mm256_storeu_pd(out, v); }

Complex cdotc_avx2(std::size_t n, const Complex* x, const Complex* y) {
  const double* xp = as_doubles(x);
  const double* yp = as_doubles(y);
  __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xa = _mm256_loadu_pd(xp + 2 * i);
    const __m256d ya = _mm256_loadu_pd(yp + 2 * i);
    const __m256d xb = _mm256_loadu_pd(xp + 2 * i + 4);
    const __m256d yb = _mm256_loadu_pd(yp + 2 * i + 4);
    re0 = _mm256_fmadd_pd(xa, ya, re0);
    re1 = _mm256_fmadd_pd(xb, yb, re1);
    im0 = _mm256_fmadd_pd(xa, swap_pairs(ya), im0);
    im1 = _mm256_fmadd_pd(xb, swap_pairs(yb), im1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d xa = _mm256_loadu_pd(xp + 2 * i);
    const __m256d ya = _mm256_loadu_pd(yp + 2 * i);
    re0 = _mm256_fmadd_pd(xa, ya, re0);
    im0 = _mm256_fmadd_pd(xa, swap_pairs(ya), im0);
  }
  alignas(32) double r[4], m[4];
  store4(_mm256_add_pd(re0, re1), r);
  store4(_mm256_add_pd(im0, im1), m);
  double re = (r[0] + r[1]) + (r[2] + r[3]);
  double im = (m[0] - m[1]) + (m[2] - m[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

Complex cdotu_avx2(std::size_t n, const Complex* x, const Complex* y) {
  const double* xp = as_doubles(x);
  const double* yp = as_doubles(y);
  __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xa = _mm256_loadu_pd(xp + 2 * i);
    const __m256d ya = _mm256_loadu_pd(yp + 2 * i);
    const __m256d xb = _mm256_loadu_pd(xp + 2 * i + 4);
    const __m256d yb = _mm256_loadu_pd(yp + 2 * i + 4);
    re0 = _mm256_fmadd_pd(xa, ya, re0);
    re1 = _mm256_fmadd_pd(xb, yb, re1);
    im0 = _mm256_fmadd_pd(xa, swap_pairs(ya), im0);
    im1 = _mm256_fmadd_pd(xb, swap_pairs(yb), im1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d xa = _mm256_loadu_pd(xp + 2 * i);
    const __m256d ya = _mm256_loadu_pd(yp + 2 * i);
    re0 = _mm256_fmadd_pd(xa, ya, re0);
    im0 = _mm256_fmadd_pd(xa, swap_pairs(ya), im0);
  }
  alignas(32) double r[4], m[4];
  store4(_mm256_add_pd(re0, re1), r);
  store4(_mm256_add_pd(im0, im1), m);
  double re = (r[0] - r[1]) + (r[2] - r[3]);
  double im = (m[0] + m[1]) + (m[2] + m[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void caxpy_avx2(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const double* xp = as_doubles(x);
  double* yp = as_doubles(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    // [ar xr - ai xi, ar xi + ai xr]
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, swap_pairs(xv)));
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, prod));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = {y[i].real() + alpha.real() * xr - alpha.imag() * xi,
            y[i].imag() + alpha.real() * xi + alpha.imag() * xr};
  }
}

void cher2_row_avx2(std::size_t n, Complex a, const Complex* x, Complex b, const Complex* z,
                    Complex* y) {
  const double* xp = as_doubles(x);
  const double* zp = as_doubles(z);
  double* yp = as_doubles(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real());
  const __m256d bi = _mm256_set1_pd(b.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d zv = _mm256_loadu_pd(zp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    // [re(a conj x), -im(a conj x)] = [ar xr + ai xi, ar xi - ai xr]
    const __m256d ta = _mm256_fmsubadd_pd(ar, xv, _mm256_mul_pd(ai, swap_pairs(xv)));
    const __m256d tb = _mm256_fmsubadd_pd(br, zv, _mm256_mul_pd(bi, swap_pairs(zv)));
    _mm256_storeu_pd(yp + 2 * i, _mm256_addsub_pd(yv, _mm256_add_pd(ta, tb)));
  }
  for (; i < n; ++i) {
    const double re = a.real() * x[i].real() + a.imag() * x[i].imag() + b.real() * z[i].real() +
                      b.imag() * z[i].imag();
    const double im = a.imag() * x[i].real() - a.real() * x[i].imag() + b.imag() * z[i].real() -
                      b.real() * z[i].imag();
    y[i] = {y[i].real() - re, y[i].imag() - im};
  }
}

void drot_avx2(std::size_t n, double* x, double* y, double c, double s) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(x + i, _mm256_fnmadd_pd(sv, yv, _mm256_mul_pd(cv, xv)));
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(sv, xv, _mm256_mul_pd(cv, yv)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

ResolventSum resolvent_sum_avx2(std::size_t n, const double* mu, double energy, double eta) {
  const __m256d ev = _mm256_set1_pd(energy);
  const __m256d etav = _mm256_set1_pd(eta);
  const __m256d eta2 = _mm256_set1_pd(eta * eta);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(mu + i), ev);
    const __m256d inv = _mm256_div_pd(one, _mm256_fmadd_pd(diff, diff, eta2));
    re = _mm256_fmadd_pd(diff, inv, re);
    im = _mm256_fmadd_pd(etav, inv, im);
  }
  alignas(32) double r[4], m[4];
  store4(re, r);
  store4(im, m);
  ResolventSum sum{(r[0] + r[1]) + (r[2] + r[3]), (m[0] + m[1]) + (m[2] + m[3])};
  for (; i < n; ++i) {
    const double diff = mu[i] - energy;
    const double inv = 1.0 / (diff * diff + eta * eta);
    sum.re += diff * inv;
    sum.im += eta * inv;
  }
  return sum;
}

void coefficients_avx2(std::size_t n, const double* lambda, double energy, double eps, double dim,
                       double* c, double* d, double* c_prime, double* d_prime) {
  const __m256d ev = _mm256_set1_pd(energy);
  const __m256d epsv = _mm256_set1_pd(eps);
  const __m256d eps2 = _mm256_set1_pd(eps * eps);
  const __m256d dimv = _mm256_set1_pd(dim);
  const __m256d two_eps_dim = _mm256_set1_pd(2.0 * eps * dim);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d y = _mm256_mul_pd(dimv, _mm256_sub_pd(_mm256_loadu_pd(lambda + i), ev));
    const __m256d y2 = _mm256_mul_pd(y, y);
    const __m256d inv_q = _mm256_div_pd(one, _mm256_add_pd(y2, eps2));
    const __m256d inv_q2 = _mm256_mul_pd(inv_q, inv_q);
    _mm256_storeu_pd(c + i, _mm256_mul_pd(epsv, inv_q));
    _mm256_storeu_pd(d + i, _mm256_mul_pd(y, inv_q));
    _mm256_storeu_pd(c_prime + i, _mm256_mul_pd(_mm256_mul_pd(two_eps_dim, y), inv_q2));
    _mm256_storeu_pd(d_prime + i,
                     _mm256_mul_pd(_mm256_mul_pd(dimv, _mm256_sub_pd(y2, eps2)), inv_q2));
  }
  for (; i < n; ++i) {
    const double y = dim * (lambda[i] - energy);
    const double y2 = y * y;
    const double q = y2 + eps * eps;
    const double q2 = q * q;
    c[i] = eps / q;
    d[i] = y / q;
    c_prime[i] = 2.0 * eps * dim * y / q2;
    d_prime[i] = dim * (y2 - eps * eps) / q2;
  }
}

constexpr KernelTable kAvx2{
    "avx2",         cdotc_avx2, cdotu_avx2,         caxpy_avx2,
    cher2_row_avx2, drot_avx2,  resolvent_sum_avx2, coefficients_avx2,
};

}  // namespace

const KernelTable* avx2_table_unchecked() noexcept { return &kAvx2; }

}  // namespace wignerlab::simd

#else

namespace wignerlab::simd {
const KernelTable* avx2_table_unchecked() noexcept { return nullptr; }
}  // namespace wignerlab::simd

#endif
