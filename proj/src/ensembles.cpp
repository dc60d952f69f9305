#include "wignerlab/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include "wignerlab/error.hpp"

namespace wignerlab {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;

double std_normal_pdf(double u) noexcept { return kInvSqrt2Pi * std::exp(-0.5 * u * u); }

// Phi(hi) - Phi(lo) for hi >= lo without cancellation in either tail.
double normal_cdf_diff(double hi, double lo) noexcept {
  constexpr double r = std::numbers::sqrt2 / 2.0;
  if (lo >= 0.0) return 0.5 * (std::erfc(lo * r) - std::erfc(hi * r));
  if (hi <= 0.0) return 0.5 * (std::erfc(-hi * r) - std::erfc(-lo * r));
  return 1.0 - 0.5 * std::erfc(hi * r) - 0.5 * std::erfc(-lo * r);
}

}  // namespace

std::string_view to_string(DistributionKind kind) noexcept {
  switch (kind) {
    case DistributionKind::gaussian: return "gaussian";
    case DistributionKind::gaussian_mixture: return "gaussian_mixture";
    case DistributionKind::smoothed_uniform: return "smoothed_uniform";
  }
  return "?";
}

std::string_view to_string(EntryRole role) noexcept {
  return role == EntryRole::off_diagonal ? "off_diagonal" : "diagonal";
}

DistributionKind parse_distribution_kind(std::string_view text) {
  if (text == "gaussian") return DistributionKind::gaussian;
  if (text == "gaussian_mixture") return DistributionKind::gaussian_mixture;
  if (text == "smoothed_uniform") return DistributionKind::smoothed_uniform;
  throw ConfigError("unknown distribution kind '" + std::string(text) + "'");
}

EntryRole parse_entry_role(std::string_view text) {
  if (text == "off_diagonal") return EntryRole::off_diagonal;
  if (text == "diagonal") return EntryRole::diagonal;
  throw ConfigError("unknown entry role '" + std::string(text) + "'");
}

DistributionSpec::DistributionSpec(DistributionKind kind, std::vector<double> params,
                                   EntryRole role)
    : kind_(kind), params_(std::move(params)), role_(role) {
  for (double p : params_) {
    if (!std::isfinite(p)) throw ConfigError("distribution parameters must be finite");
  }
  const double target = role_variance(role_);
  switch (kind_) {
    case DistributionKind::gaussian:
      if (!params_.empty()) throw ConfigError("gaussian takes no parameters");
      components_.push_back({1.0, 0.0, std::sqrt(target)});
      break;

    case DistributionKind::gaussian_mixture: {
      if (params_.empty() || params_.size() % 3 != 0) {
        throw ConfigError("gaussian_mixture expects [w1, m1, s1, w2, m2, s2, ...]");
      }
      double weight_sum = 0.0;
      double mean = 0.0;
      for (std::size_t i = 0; i < params_.size(); i += 3) {
        const double w = params_[i];
        const double s = params_[i + 2];
        if (w <= 0.0) throw ConfigError("gaussian_mixture weights must be positive");
        if (s <= 0.0) throw ConfigError("gaussian_mixture scales must be positive");
        weight_sum += w;
        mean += w * params_[i + 1];
      }
      if (std::abs(weight_sum - 1.0) > 1e-9) {
        throw ConfigError("gaussian_mixture weights must sum to 1");
      }
      if (params_.size() == 3) {
        components_.push_back({1.0, 0.0, std::sqrt(target)});
        break;
      }
      double second = 0.0;
      for (std::size_t i = 0; i < params_.size(); i += 3) {
        const double dm = params_[i + 1] - mean;
        second += params_[i] * (params_[i + 2] * params_[i + 2] + dm * dm);
      }
      const double scale = std::sqrt(target / second);
      for (std::size_t i = 0; i < params_.size(); i += 3) {
        components_.push_back(
            {params_[i], (params_[i + 1] - mean) * scale, params_[i + 2] * scale});
      }
      break;
    }

    case DistributionKind::smoothed_uniform: {
      if (params_.size() != 1 || params_[0] <= 0.0) {
        throw ConfigError("smoothed_uniform expects [width] with width > 0");
      }
      const double width = params_[0];
      const double scale = std::sqrt(target / (1.0 / 3.0 + width * width));
      half_width_ = scale;
      smoothing_ = scale * width;
      break;
    }
  }
}

double DistributionSpec::pdf(double s) const noexcept {
  if (kind_ == DistributionKind::smoothed_uniform) {
    const double a = half_width_;
    return normal_cdf_diff((s + a) / smoothing_, (s - a) / smoothing_) / (2.0 * a);
  }
  double h = 0.0;
  for (const auto& c : components_) h += c.weight * std_normal_pdf((s - c.mean) / c.sigma) / c.sigma;
  return h;
}

double DistributionSpec::pdf_d1(double s) const noexcept {
  if (kind_ == DistributionKind::smoothed_uniform) {
    const double a = half_width_;
    const double sg = smoothing_;
    return (std_normal_pdf((s + a) / sg) - std_normal_pdf((s - a) / sg)) / (2.0 * a * sg);
  }
  double h = 0.0;
  for (const auto& c : components_) {
    const double u = (s - c.mean) / c.sigma;
    h -= c.weight * u * std_normal_pdf(u) / (c.sigma * c.sigma);
  }
  return h;
}

double DistributionSpec::pdf_d2(double s) const noexcept {
  if (kind_ == DistributionKind::smoothed_uniform) {
    const double a = half_width_;
    const double sg = smoothing_;
    const double u1 = (s + a) / sg;
    const double u2 = (s - a) / sg;
    return (u2 * std_normal_pdf(u2) - u1 * std_normal_pdf(u1)) / (2.0 * a * sg * sg);
  }
  double h = 0.0;
  for (const auto& c : components_) {
    const double u = (s - c.mean) / c.sigma;
    h += c.weight * (u * u - 1.0) * std_normal_pdf(u) / (c.sigma * c.sigma * c.sigma);
  }
  return h;
}

double DistributionSpec::support_radius() const noexcept {
  constexpr double kSigmas = 20.0;
  if (kind_ == DistributionKind::smoothed_uniform) return half_width_ + kSigmas * smoothing_;
  double r = 0.0;
  for (const auto& c : components_) r = std::max(r, std::abs(c.mean) + kSigmas * c.sigma);
  return r;
}

std::vector<double> DistributionSpec::breakpoints() const {
  if (kind_ == DistributionKind::smoothed_uniform) return {-half_width_, half_width_};
  std::vector<double> points;
  for (const auto& c : components_) points.push_back(c.mean);
  return points;
}

double DistributionSpec::sample(Rng& rng) const {
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  if (kind_ == DistributionKind::smoothed_uniform) {
    boost::random::uniform_real_distribution<double> uniform(-half_width_, half_width_);
    const double u = uniform(rng);
    return u + smoothing_ * normal(rng);
  }
  std::size_t pick = 0;
  if (components_.size() > 1) {
    boost::random::uniform_real_distribution<double> uniform(0.0, 1.0);
    double r = uniform(rng);
    for (pick = 0; pick + 1 < components_.size(); ++pick) {
      if (r < components_[pick].weight) break;
      r -= components_[pick].weight;
    }
  }
  const auto& c = components_[pick];
  return c.mean + c.sigma * normal(rng);
}

double sample_entry(const DistributionSpec& dist, Rng& rng) { return dist.sample(rng); }

double sample_entry(const DistributionSpec& dist, const SeedSpec& seed) {
  Rng rng = make_rng(seed);
  return dist.sample(rng);
}

HermitianMatrix sample_wigner(std::size_t n, const DistributionSpec& off,
                              const DistributionSpec& diag, const SeedSpec& seed) {
  if (n == 0) throw DomainError("sample_wigner: n must be positive");
  if (off.role() != EntryRole::off_diagonal || diag.role() != EntryRole::diagonal) {
    throw ConfigError("sample_wigner: off/diag distributions have mismatched roles");
  }
  Rng rng = make_rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  HermitianMatrix h(n);
  for (std::size_t j = 0; j < n; ++j) {
    h.set_diagonal(j, scale * diag.sample(rng));
    for (std::size_t k = j + 1; k < n; ++k) {
      const double x = off.sample(rng);
      const double y = off.sample(rng);
      h.set(j, k, Complex(scale * x, scale * y));
    }
  }
  return h;
}

HermitianMatrix sample_gue(std::size_t n, const SeedSpec& seed) {
  static const DistributionSpec off = DistributionSpec::gaussian(EntryRole::off_diagonal);
  static const DistributionSpec diag = DistributionSpec::gaussian(EntryRole::diagonal);
  return sample_wigner(n, off, diag, seed);
}

RegularityIntegrals regularity_integrals(const DistributionSpec& dist) {
  using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  constexpr double kTolerance = 1e-6;
  constexpr unsigned kMaxDepth = 25;

  // Split at the features of the density so each panel is smooth.
  const double radius = dist.support_radius();
  std::vector<double> breaks = dist.breakpoints();
  breaks.insert(breaks.end(), {-radius, 0.0, radius});
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto integrate = [&](auto&& integrand, const char* name) {
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      double error = 0.0;
      total += Quad::integrate(integrand, breaks[i], breaks[i + 1], kMaxDepth, 1e-12, &error);
      total_error += error;
    }
    if (!std::isfinite(total) || total_error > kTolerance * std::abs(total)) {
      throw NumericError(std::string("regularity_integrals: quadrature for ") + name +
                         " did not converge (estimate " + std::to_string(total) + ", error " +
                         std::to_string(total_error) + ")");
    }
    return total;
  };

  auto log_derivative = [&](double s) {
    const double h = dist.pdf(s);
    return h > 0.0 ? dist.pdf_d1(s) / h : 0.0;
  };

  RegularityIntegrals out;
  out.i6 = integrate(
      [&](double s) {
        const double r = log_derivative(s);
        return std::pow(r * r, 3) * dist.pdf(s);
      },
      "I6");
  out.i4 = integrate(
      [&](double s) {
        const double r = log_derivative(s);
        return r * r * r * r * dist.pdf(s);
      },
      "I4");
  out.i2pp = integrate(
      [&](double s) {
        const double h = dist.pdf(s);
        if (h <= 0.0) return 0.0;
        const double r = dist.pdf_d2(s) / h;
        return r * r * h;
      },
      "I2pp");
  return out;
}

}  // namespace wignerlab
