#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wignerlab/eigensolver.hpp"

namespace wignerlab {

/// Semicircle density (1/2pi) sqrt(4 - E^2) on [-2, 2], zero outside.
double rho_sc(double energy) noexcept;

/// Cumulative distribution of rho_sc.
double F_sc(double energy) noexcept;

/// Inverse of F_sc on [0, 1] (bisection to full precision).
double F_sc_inverse(double p);

/// Stieltjes transform of the semicircle law: the root of m^2 + z m + 1 = 0
/// with Im m > 0. Throws DomainError when Im z <= 0.
Complex m_sc(Complex z);

/// d m_sc / dz = -m / (2m + z).
Complex m_sc_derivative(Complex z);

/// Number of eigenvalues in the closed interval [a, b]. Throws DomainError
/// when a > b.
std::size_t counting(const Spectrum& spectrum, double a, double b);
std::size_t counting(std::span<const double> sorted_eigenvalues, double a, double b);

/// m_N(z) = (1/N) sum 1 / (mu - z). Throws DomainError when Im z <= 0.
Complex stieltjes(const Spectrum& spectrum, Complex z);
Complex stieltjes(std::span<const double> eigenvalues, Complex z);

/// Integral of Im m_N(x + i eta) over x in [a, b], evaluated exactly as
/// (1/N) sum [atan((mu - a)/eta) - atan((mu - b)/eta)].
double integrated_im_stieltjes(std::span<const double> eigenvalues, double a, double b,
                               double eta);

/// Pointwise dyadic split of Im m_N(E + i eps): the eigenvalues within eps
/// of E, plus annuli 2^l eps <= |mu - E| <= 2^(l+1) eps each bounded by
/// their inner radius. The series stops at the first annulus lying
/// entirely beyond the spectrum. lhs <= rhs always.
struct DyadicBound {
  double lhs = 0.0;
  double rhs = 0.0;
  std::size_t levels = 0;  // number of annuli summed
};
DyadicBound dyadic_bound(const Spectrum& spectrum, double energy, double eps);

/// det[ sin(pi (x_j - x_l)) / (pi (x_j - x_l)) ] for up to six points.
double sine_kernel_det(std::span<const double> points);

/// log of prod_{i<j} (mu_i - mu_j)^2 exp(-(N/2) sum mu^2), unnormalized.
/// Returns -infinity on coincident points. Requires mu.size() == n <= 8.
double gue_log_density(std::span<const double> mu, std::size_t n);

/// log of the integral of the unnormalized GUE density, by nested adaptive
/// quadrature. Supported for n <= 3 only.
double gue_log_normalization(std::size_t n);

struct SpacingSample {
  std::vector<double> spacings;
  double lo = 0.0;
  double hi = 0.0;
};

/// s_i = N (F_sc(mu_{i+1}) - F_sc(mu_i)) for consecutive eigenvalues inside
/// [lo, hi]. The window must lie in (-2, 2). Fewer than two eigenvalues in
/// the window give an empty sample.
SpacingSample unfolded_spacings(const Spectrum& spectrum, double lo, double hi);
SpacingSample unfolded_spacings(std::span<const double> sorted_eigenvalues, double lo, double hi);

/// GUE Wigner surmise p(s) = (32/pi^2) s^2 exp(-4 s^2 / pi). Throws
/// DomainError for s < 0.
double wigner_surmise_gue(double s);
double wigner_surmise_gue_cdf(double s) noexcept;

/// Kolmogorov-Smirnov distance between the empirical law of `samples` and
/// the GUE Wigner surmise.
double ks_distance_to_surmise(std::vector<double> samples);

}  // namespace wignerlab
