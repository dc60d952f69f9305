#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wignerlab/hermitian_matrix.hpp"
#include "wignerlab/rng.hpp"

namespace wignerlab {

enum class DistributionKind { gaussian, gaussian_mixture, smoothed_uniform };
enum class EntryRole { off_diagonal, diagonal };

std::string_view to_string(DistributionKind kind) noexcept;
std::string_view to_string(EntryRole role) noexcept;
DistributionKind parse_distribution_kind(std::string_view text);
EntryRole parse_entry_role(std::string_view text);

/// Target variance of a single real entry: 1/2 for the real and imaginary
/// parts of off-diagonal entries, 1 for diagonal entries.
constexpr double role_variance(EntryRole role) noexcept {
  return role == EntryRole::off_diagonal ? 0.5 : 1.0;
}

/// Entry density h with closed-form h, h', h''.
///
/// Parameters are stored as given by the user and normalized internally:
/// every law is shifted to mean 0 and scaled to the variance of its role.
///
///   gaussian          params = []
///   gaussian_mixture  params = [w1, m1, s1, w2, m2, s2, ...]  (w > 0, sum w = 1, s > 0)
///   smoothed_uniform  params = [width]  uniform on [-1, 1] convolved with N(0, width^2)
///
/// Construction validates the parameters and throws ConfigError.
class DistributionSpec {
 public:
  DistributionSpec(DistributionKind kind, std::vector<double> params, EntryRole role);

  static DistributionSpec gaussian(EntryRole role) { return {DistributionKind::gaussian, {}, role}; }

  DistributionKind kind() const noexcept { return kind_; }
  EntryRole role() const noexcept { return role_; }
  const std::vector<double>& params() const noexcept { return params_; }

  double variance() const noexcept { return role_variance(role_); }

  /// Density and its first two derivatives.
  double pdf(double s) const noexcept;
  double pdf_d1(double s) const noexcept;
  double pdf_d2(double s) const noexcept;

  /// Interval [-L, L] outside of which the density and the regularity
  /// integrands are negligible (h < 1e-80 relative to its peak).
  double support_radius() const noexcept;

  /// Locations where the density changes shape quickly (component means,
  /// edges of the smoothed box); used to split quadrature panels.
  std::vector<double> breakpoints() const;

  double sample(Rng& rng) const;

  /// Same spec with a different role (and hence a different scale).
  DistributionSpec with_role(EntryRole role) const { return {kind_, params_, role}; }

  friend bool operator==(const DistributionSpec& a, const DistributionSpec& b) {
    return a.kind_ == b.kind_ && a.params_ == b.params_ && a.role_ == b.role_;
  }

 private:
  struct Component {
    double weight;
    double mean;
    double sigma;
  };

  DistributionKind kind_;
  std::vector<double> params_;
  EntryRole role_;

  // Normalized representation.
  std::vector<Component> components_;  // gaussian, gaussian_mixture
  double half_width_ = 0.0;            // smoothed_uniform: uniform on [-a, a]
  double smoothing_ = 0.0;             //                   convolved with N(0, s^2)
};

/// Draw one entry from the stream identified by `seed`.
double sample_entry(const DistributionSpec& dist, const SeedSpec& seed);
double sample_entry(const DistributionSpec& dist, Rng& rng);

/// H with h_jk = (x_jk + i y_jk)/sqrt(n) for j < k and h_jj = x_jj/sqrt(n).
/// Draw order per row j: x_jj, then (x_jk, y_jk) for k = j+1..n-1.
HermitianMatrix sample_wigner(std::size_t n, const DistributionSpec& off,
                              const DistributionSpec& diag, const SeedSpec& seed);

/// Gaussian Unitary Ensemble in the same normalization.
HermitianMatrix sample_gue(std::size_t n, const SeedSpec& seed);

struct RegularityIntegrals {
  double i6 = 0.0;    // int |h'/h|^6 h
  double i4 = 0.0;    // int |h'/h|^4 h
  double i2pp = 0.0;  // int |h''/h|^2 h
};

/// Adaptive Gauss-Kronrod quadrature of the entry-density regularity
/// integrals, relative error <= 1e-6. Throws NumericError on non-convergence.
RegularityIntegrals regularity_integrals(const DistributionSpec& dist);

}  // namespace wignerlab
