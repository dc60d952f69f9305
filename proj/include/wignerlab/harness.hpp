#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "wignerlab/ensembles.hpp"

namespace wignerlab {

enum class ExperimentKind {
  dos,
  im_stieltjes,
  wegner,
  derivative,
  scale_sweep,
  delta_moments,
  spacing,
};

std::string_view to_string(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment_kind(std::string_view text);

/// How a spectral resolution eta depends on the matrix size N.
enum class EtaScale { absolute, over_n, over_n_three_halves };

std::string_view to_string(EtaScale scale) noexcept;
EtaScale parse_eta_scale(std::string_view text);

struct EtaSpec {
  double value = 0.0;
  EtaScale scale = EtaScale::absolute;

  double at(std::size_t n) const noexcept;
  /// "0.5", "2/N", "0.05/N^1.5"
  std::string label() const;

  friend bool operator==(const EtaSpec&, const EtaSpec&) = default;
};

/// Declarative description of a Monte Carlo experiment. Fields that a kind
/// does not use are ignored.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::dos;
  std::vector<std::size_t> n{128};
  std::size_t samples = 100;
  std::vector<double> energies{0.0};
  std::vector<EtaSpec> etas{{1.0, EtaScale::over_n}};
  DistributionSpec off = DistributionSpec::gaussian(EntryRole::off_diagonal);
  DistributionSpec diag = DistributionSpec::gaussian(EntryRole::diagonal);
  std::uint64_t seed = 0;

  double kappa = 0.5;           // energies must lie in (-2 + kappa, 2 - kappa)
  double delta_e = 0.1;         // derivative: finite-difference step delta_e / N
  double eps = 1.0;             // delta_moments: good-event radius eps / N
  std::vector<unsigned> moments{0, 1, 2};
  std::vector<double> deltas{0.5, 0.1, 0.02};
  std::size_t minor_index = 0;  // delta_moments: removed row (0-based)
  double bulk_fraction = 0.5;   // spacing: central fraction of the spectrum
  double eta_prime_ratio = 0.0; // dos: > 0 adds the arctangent cross-check at eta' = ratio * eta

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

/// One estimate at one parameter point.
///
/// `std_error` is the sample standard deviation over sqrt(samples), NaN when
/// samples == 1 or when no standard error is defined for the statistic.
/// `reference` is NaN when no closed form exists. For delta_moments rows the
/// `eta` column carries the window half-width delta (in units of 1/N).
struct ResultRow {
  std::string series;
  std::size_t n = 0;
  double energy = 0.0;
  double eta = 0.0;
  double mean = 0.0;
  double std_error = std::numeric_limits<double>::quiet_NaN();
  std::size_t samples = 0;
  double reference = std::numeric_limits<double>::quiet_NaN();
  double ratio = std::numeric_limits<double>::quiet_NaN();
  double sample_max = std::numeric_limits<double>::quiet_NaN();
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<ResultRow> rows;
  std::vector<std::string> warnings;
  double wall_time_s = 0.0;
  std::string kernel;  // active SIMD kernel table
};

struct RunOptions {
  /// Worker count; 0 means WIGNERLAB_THREADS if set, otherwise the number
  /// of hardware threads.
  unsigned threads = 0;
};

unsigned resolve_thread_count(const RunOptions& options);

/// Averaged density of states N[E - eta/2, E + eta/2] / (N eta). Reference:
/// the semicircle average over the same window.
ExperimentResult averaged_dos(const ExperimentSpec& spec, const RunOptions& options = {});

/// E Im m_N(E + i eta); reference Im m_sc(E + i eta), which tends to
/// pi rho_sc(E) as eta -> 0.
ExperimentResult expected_im_stieltjes(const ExperimentSpec& spec, const RunOptions& options = {});

/// E N[E +- eta/2] and E N[E +- eta/2]^2, with ratios to N eta (the
/// empirical Wegner constant).
ExperimentResult wegner_scan(const ExperimentSpec& spec, const RunOptions& options = {});

/// Common-random-number central difference of E Im m_N(E + i eta) with
/// step delta_e / N; ratio column is |derivative| / N.
ExperimentResult derivative_scan(const ExperimentSpec& spec, const RunOptions& options = {});

/// Averaged density of states for every (N, eta schedule) pair; one series
/// per schedule.
ExperimentResult scale_sweep(const ExperimentSpec& spec, const RunOptions& options = {});

/// E 1(Omega) Delta^k, E 1(Omega) Delta^k N_B[E +- delta/N]^2 and
/// P(N |lambda_beta0 - E| <= delta) on the minor without row minor_index.
ExperimentResult delta_moments(const ExperimentSpec& spec, const RunOptions& options = {});

/// Unfolded nearest-neighbour spacings in the central bulk window: mean,
/// fraction below 0.1 and KS distance to the GUE Wigner surmise.
ExperimentResult spacing(const ExperimentSpec& spec, const RunOptions& options = {});

/// Dispatch on spec.kind.
ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

}  // namespace wignerlab
