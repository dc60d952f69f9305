#include "wignerlab/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wignerlab/error.hpp"
#include "wignerlab/simd/kernels.hpp"

namespace wignerlab {

using std::numbers::pi;

double rho_sc(double energy) noexcept {
  if (!(std::abs(energy) < 2.0)) return 0.0;
  return std::sqrt(4.0 - energy * energy) / (2.0 * pi);
}

double F_sc(double energy) noexcept {
  if (energy <= -2.0) return 0.0;
  if (energy >= 2.0) return 1.0;
  return 0.5 + (energy * std::sqrt(4.0 - energy * energy) / 4.0 + std::asin(energy / 2.0)) / pi;
}

double F_sc_inverse(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("F_sc_inverse: probability outside [0, 1]");
  double lo = -2.0;
  double hi = 2.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (F_sc(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Complex m_sc(Complex z) {
  if (!(z.imag() > 0.0)) throw DomainError("m_sc: requires Im z > 0");
  const Complex r = std::sqrt(z * z - 4.0);
  // The two roots multiply to 1; compute the larger without cancellation.
  const Complex big = (std::real(std::conj(z) * r) >= 0.0) ? (-z - r) / 2.0 : (-z + r) / 2.0;
  const Complex small = 1.0 / big;
  return big.imag() > 0.0 ? big : small;
}

Complex m_sc_derivative(Complex z) {
  const Complex m = m_sc(z);
  return -m / (2.0 * m + z);
}

std::size_t counting(std::span<const double> sorted_eigenvalues, double a, double b) {
  if (a > b) throw DomainError("counting: empty interval (a > b)");
  const auto first = std::lower_bound(sorted_eigenvalues.begin(), sorted_eigenvalues.end(), a);
  const auto last = std::upper_bound(first, sorted_eigenvalues.end(), b);
  return static_cast<std::size_t>(last - first);
}

std::size_t counting(const Spectrum& spectrum, double a, double b) {
  return counting(std::span<const double>(spectrum.eigenvalues()), a, b);
}

Complex stieltjes(std::span<const double> eigenvalues, Complex z) {
  if (!(z.imag() > 0.0)) throw DomainError("stieltjes: requires Im z > 0");
  if (eigenvalues.empty()) return 0.0;
  const simd::ResolventSum s =
      simd::active().resolvent_sum(eigenvalues.size(), eigenvalues.data(), z.real(), z.imag());
  const double inv_n = 1.0 / static_cast<double>(eigenvalues.size());
  return {s.re * inv_n, s.im * inv_n};
}

Complex stieltjes(const Spectrum& spectrum, Complex z) {
  return stieltjes(std::span<const double>(spectrum.eigenvalues()), z);
}

double integrated_im_stieltjes(std::span<const double> eigenvalues, double a, double b,
                               double eta) {
  if (!(eta > 0.0)) throw DomainError("integrated_im_stieltjes: requires eta > 0");
  if (a > b) throw DomainError("integrated_im_stieltjes: empty interval (a > b)");
  double sum = 0.0;
  for (double mu : eigenvalues) sum += std::atan((mu - a) / eta) - std::atan((mu - b) / eta);
  return eigenvalues.empty() ? 0.0 : sum / static_cast<double>(eigenvalues.size());
}

DyadicBound dyadic_bound(const Spectrum& spectrum, double energy, double eps) {
  if (!(eps > 0.0)) throw DomainError("dyadic_bound: requires eps > 0");
  DyadicBound out;
  const auto& mu = spectrum.eigenvalues();
  if (mu.empty()) return out;
  const double n = static_cast<double>(mu.size());
  out.lhs = stieltjes(spectrum, Complex(energy, eps)).imag();
  out.rhs = static_cast<double>(counting(spectrum, energy - eps, energy + eps)) / (n * eps);

  const double reach = std::max(std::abs(mu.front() - energy), std::abs(mu.back() - energy));
  double inner = eps;  // 2^l eps
  double weight = 1.0 / (n * eps);  // (eps/N) / (2^{2l} eps^2)
  while (inner <= reach) {
    const double outer = 2.0 * inner;
    const std::size_t count = counting(spectrum, energy - outer, energy - inner) +
                              counting(spectrum, energy + inner, energy + outer);
    out.rhs += weight * static_cast<double>(count);
    ++out.levels;
    inner = outer;
    weight /= 4.0;
  }
  return out;
}

namespace {

// Determinant by Gaussian elimination with partial pivoting.
template <std::size_t Max>
double small_determinant(std::array<double, Max * Max>& a, std::size_t k) {
  double det = 1.0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (std::abs(a[r * Max + c]) > std::abs(a[piv * Max + c])) piv = r;
    }
    if (a[piv * Max + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[c * Max + j], a[piv * Max + j]);
      det = -det;
    }
    det *= a[c * Max + c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const double f = a[r * Max + c] / a[c * Max + c];
      for (std::size_t j = c; j < k; ++j) a[r * Max + j] -= f * a[c * Max + j];
    }
  }
  return det;
}

double sinc_pi(double x) noexcept {
  if (x == 0.0) return 1.0;
  return std::sin(pi * x) / (pi * x);
}

}  // namespace

double sine_kernel_det(std::span<const double> points) {
  constexpr std::size_t kMax = 6;
  const std::size_t k = points.size();
  if (k == 0 || k > kMax) throw PreconditionError("sine_kernel_det: supports 1..6 points");
  std::array<double, kMax * kMax> a{};
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < k; ++l) a[j * kMax + l] = sinc_pi(points[j] - points[l]);
  }
  return small_determinant<kMax>(a, k);
}

double gue_log_density(std::span<const double> mu, std::size_t n) {
  if (mu.size() != n) throw DomainError("gue_log_density: expected " + std::to_string(n) + " points");
  if (n == 0 || n > 8) throw DomainError("gue_log_density: supports 1 <= N <= 8");
  double log_vandermonde = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum_sq += mu[i] * mu[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double diff = mu[i] - mu[j];
      if (diff == 0.0) return -std::numeric_limits<double>::infinity();
      log_vandermonde += 2.0 * std::log(std::abs(diff));
    }
  }
  return log_vandermonde - 0.5 * static_cast<double>(n) * sum_sq;
}

double gue_log_normalization(std::size_t n) {
  if (n == 0 || n > 3) throw DomainError("gue_log_normalization: supported for 1 <= N <= 3");
  using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  // exp(-(N/2) mu^2) < 1e-40 beyond this radius for every supported N.
  const double radius = 14.0;
  constexpr unsigned depth = 12;
  constexpr double tol = 1e-12;
  auto density = [n](std::span<const double> mu) { return std::exp(gue_log_density(mu, n)); };

  double z = 0.0;
  if (n == 1) {
    z = Quad::integrate([&](double a) { return density(std::array{a}); }, -radius, radius, depth,
                        tol);
  } else if (n == 2) {
    z = Quad::integrate(
        [&](double a) {
          return Quad::integrate([&](double b) { return density(std::array{a, b}); }, -radius,
                                 radius, depth, tol);
        },
        -radius, radius, depth, tol);
  } else {
    z = Quad::integrate(
        [&](double a) {
          return Quad::integrate(
              [&](double b) {
                return Quad::integrate([&](double c) { return density(std::array{a, b, c}); },
                                       -radius, radius, depth, tol);
              },
              -radius, radius, depth, tol);
        },
        -radius, radius, depth, tol);
  }
  return std::log(z);
}

SpacingSample unfolded_spacings(std::span<const double> sorted_eigenvalues, double lo, double hi) {
  if (!(lo > -2.0 && hi < 2.0 && lo <= hi)) {
    throw DomainError("unfolded_spacings: window must lie inside (-2, 2)");
  }
  SpacingSample out;
  out.lo = lo;
  out.hi = hi;
  const double n = static_cast<double>(sorted_eigenvalues.size());
  const auto first = std::lower_bound(sorted_eigenvalues.begin(), sorted_eigenvalues.end(), lo);
  const auto last = std::upper_bound(first, sorted_eigenvalues.end(), hi);
  if (last - first < 2) return out;
  out.spacings.reserve(static_cast<std::size_t>(last - first - 1));
  double prev = F_sc(*first);
  for (auto it = first + 1; it != last; ++it) {
    const double cur = F_sc(*it);
    out.spacings.push_back(n * (cur - prev));
    prev = cur;
  }
  return out;
}

SpacingSample unfolded_spacings(const Spectrum& spectrum, double lo, double hi) {
  return unfolded_spacings(std::span<const double>(spectrum.eigenvalues()), lo, hi);
}

double wigner_surmise_gue(double s) {
  if (s < 0.0) throw DomainError("wigner_surmise_gue: requires s >= 0");
  return 32.0 / (pi * pi) * s * s * std::exp(-4.0 * s * s / pi);
}

double wigner_surmise_gue_cdf(double s) noexcept {
  if (s <= 0.0) return 0.0;
  return std::erf(2.0 * s / std::sqrt(pi)) - 4.0 * s / pi * std::exp(-4.0 * s * s / pi);
}

double ks_distance_to_surmise(std::vector<double> samples) {
  if (samples.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(samples.begin(), samples.end());
  const double m = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = wigner_surmise_gue_cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / m - cdf, cdf - static_cast<double>(i) / m});
  }
  return d;
}

}  // namespace wignerlab
