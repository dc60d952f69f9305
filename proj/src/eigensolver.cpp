#include "wignerlab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wignerlab/error.hpp"
#include "wignerlab/simd/kernels.hpp"

namespace wignerlab {

Spectrum::Spectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {}

Spectrum::Spectrum(std::vector<double> eigenvalues, std::vector<Complex> eigenvectors)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
  if (vectors_.size() != values_.size() * values_.size()) {
    throw DomainError("Spectrum: eigenvector storage does not match dimension");
  }
}

std::span<const Complex> Spectrum::eigenvector(std::size_t k) const {
  if (!has_eigenvectors()) throw PreconditionError("Spectrum: eigenvectors were not computed");
  const std::size_t n = values_.size();
  return {vectors_.data() + k * n, n};
}

namespace {

struct Reflector {
  Complex tau;
  std::vector<Complex> v;  // v[0] == 1
};

struct Tridiagonal {
  std::vector<double> d;
  std::vector<double> e;
  std::vector<Reflector> reflectors;  // reflector k acts on indices k+1..n-1
};

// Householder reflector H = I - tau v v^H with H^H x = beta e_1, beta real.
// On return x holds v (x[0] = 1). Follows the LAPACK zlarfg conventions.
Complex make_reflector(std::span<Complex> x, double& beta) {
  const Complex alpha = x[0];
  double xnorm2 = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) xnorm2 += std::norm(x[i]);
  if (xnorm2 == 0.0 && alpha.imag() == 0.0) {
    beta = alpha.real();
    x[0] = 1.0;
    return 0.0;
  }
  const double norm = std::sqrt(std::norm(alpha) + xnorm2);
  beta = alpha.real() >= 0.0 ? -norm : norm;
  const Complex tau((beta - alpha.real()) / beta, -alpha.imag() / beta);
  const Complex scale = 1.0 / (alpha - beta);
  for (std::size_t i = 1; i < x.size(); ++i) x[i] *= scale;
  x[0] = 1.0;
  return tau;
}

// A = Q T Q^H with Q = H_0 H_1 ... H_{n-2}; the working copy is destroyed.
Tridiagonal tridiagonalize(const HermitianMatrix& h, bool keep_reflectors) {
  const simd::KernelTable& k = simd::active();
  const std::size_t n = h.size();
  std::vector<Complex> a(h.data().begin(), h.data().end());
  Tridiagonal t;
  t.d.resize(n);
  t.e.resize(n > 0 ? n - 1 : 0);
  std::vector<Complex> p(n);

  for (std::size_t col = 0; col + 1 < n; ++col) {
    const std::size_t m = n - col - 1;
    const std::size_t off = col + 1;
    std::vector<Complex> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = a[(off + i) * n + col];
    double beta = 0.0;
    const Complex tau = make_reflector(v, beta);
    t.e[col] = beta;
    t.d[col] = a[col * n + col].real();

    if (tau != 0.0) {
      // p = tau * A_sub v
      for (std::size_t r = 0; r < m; ++r) {
        p[r] = tau * k.cdotu(m, &a[(off + r) * n + off], v.data());
      }
      // w = p - (tau / 2)(p^H v) v
      const Complex alpha = -0.5 * tau * k.cdotc(m, p.data(), v.data());
      k.caxpy(m, alpha, v.data(), p.data());
      // A_sub -= v w^H + w v^H
      for (std::size_t r = 0; r < m; ++r) {
        k.cher2_row(m, v[r], p.data(), p[r], v.data(), &a[(off + r) * n + off]);
      }
    }
    if (keep_reflectors) t.reflectors.push_back({tau, std::move(v)});
  }
  if (n > 0) t.d[n - 1] = a[(n - 1) * n + (n - 1)].real();
  return t;
}

// Implicit QL with Wilkinson-type shifts on (d, e), e[i] coupling i and i+1.
// When z is non-null it holds n rows that are rotated alongside, so on exit
// row k is the eigenvector of the tridiagonal matrix for d[k].
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z) {
  const std::size_t n = d.size();
  if (n <= 1) return;
  std::vector<double> sub(e.begin(), e.end());
  sub.push_back(0.0);
  const simd::KernelTable& k = simd::active();
  const std::size_t cap = 30 * n;
  std::size_t iterations = 0;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    std::size_t m = l;
    for (;;) {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(sub[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iterations > cap) {
        throw NumericError("eigensolver: QL iteration did not converge for eigenvalue index " +
                           std::to_string(l));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * sub[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + sub[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * sub[i];
        const double b = c * sub[i];
        r = std::hypot(f, g);
        sub[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          sub[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) k.drot(n, &(*z)[i * n], &(*z)[(i + 1) * n], c, s);
      }
      if (deflated) continue;
      d[l] -= p;
      sub[l] = g;
      sub[m] = 0.0;
    }
  }
}

std::vector<std::size_t> ascending_order(const std::vector<double>& d) {
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  return order;
}

void check_finite(const HermitianMatrix& h) {
  for (const Complex& z : h.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("eigensolver: matrix has non-finite entries");
    }
  }
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  if (d.size() != e.size() + 1 && !(d.empty() && e.empty())) {
    throw DomainError("tridiagonal_eigenvalues: size mismatch");
  }
  tridiagonal_ql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

Spectrum eigvalsh(const HermitianMatrix& h) {
  check_finite(h);
  Tridiagonal t = tridiagonalize(h, false);
  return Spectrum(tridiagonal_eigenvalues(std::move(t.d), std::move(t.e)));
}

Spectrum eigh(const HermitianMatrix& h) {
  check_finite(h);
  const simd::KernelTable& k = simd::active();
  const std::size_t n = h.size();
  Tridiagonal t = tridiagonalize(h, true);

  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  tridiagonal_ql(t.d, t.e, &z);

  const std::vector<std::size_t> order = ascending_order(t.d);
  std::vector<double> values(n);
  std::vector<Complex> vectors(n * n);
  for (std::size_t out = 0; out < n; ++out) {
    const std::size_t src = order[out];
    values[out] = t.d[src];
    for (std::size_t i = 0; i < n; ++i) vectors[out * n + i] = z[src * n + i];
  }

  // u = H_0 (H_1 (... H_{n-2} z)) for every eigenvector row.
  for (std::size_t col = t.reflectors.size(); col-- > 0;) {
    const Reflector& ref = t.reflectors[col];
    if (ref.tau == 0.0) continue;
    const std::size_t off = col + 1;
    const std::size_t m = n - off;
    for (std::size_t row = 0; row < n; ++row) {
      Complex* u = &vectors[row * n + off];
      const Complex s = k.cdotc(m, ref.v.data(), u);
      k.caxpy(m, -ref.tau * s, ref.v.data(), u);
    }
  }

  for (std::size_t row = 0; row < n; ++row) {
    Complex* u = &vectors[row * n];
    std::size_t big = 0;
    double big_abs = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(u[i]);
      if (a > big_abs) {
        big_abs = a;
        big = i;
      }
    }
    if (big_abs > 0.0) {
      const Complex phase = std::conj(u[big]) / big_abs;
      for (std::size_t i = 0; i < n; ++i) u[i] *= phase;
      u[big] = Complex(std::abs(u[big]), 0.0);
    }
  }
  return Spectrum(std::move(values), std::move(vectors));
}

HermitianMatrix minor(const HermitianMatrix& h, std::size_t j) {
  const std::size_t n = h.size();
  if (n < 2) throw DomainError("minor: matrix must be at least 2 x 2");
  if (j >= n) throw DomainError("minor: index " + std::to_string(j) + " out of range");
  HermitianMatrix b(n - 1);
  for (std::size_t r = 0, br = 0; r < n; ++r) {
    if (r == j) continue;
    for (std::size_t c = r, bc = br; c < n; ++c) {
      if (c == j) continue;
      if (br == bc) {
        b.set_diagonal(br, h(r, r).real());
      } else {
        b.set(br, bc, h(r, c));
      }
      ++bc;
    }
    ++br;
  }
  return b;
}

}  // namespace wignerlab
