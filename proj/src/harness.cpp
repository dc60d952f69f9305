#include "wignerlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "wignerlab/eigensolver.hpp"
#include "wignerlab/error.hpp"
#include "wignerlab/format.hpp"
#include "wignerlab/minor_diagnostics.hpp"
#include "wignerlab/simd/kernels.hpp"
#include "wignerlab/spectral.hpp"

namespace wignerlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSubMicroscopic = 0.05;  // N eta below this triggers a variance warning

struct KindName {
  ExperimentKind kind;
  std::string_view name;
};
constexpr KindName kKindNames[] = {
    {ExperimentKind::dos, "dos"},
    {ExperimentKind::im_stieltjes, "im_stieltjes"},
    {ExperimentKind::wegner, "wegner"},
    {ExperimentKind::derivative, "derivative"},
    {ExperimentKind::scale_sweep, "scale_sweep"},
    {ExperimentKind::delta_moments, "delta_moments"},
    {ExperimentKind::spacing, "spacing"},
};

// Compensated (Neumaier) summation; the order of terms is fixed by the
// caller, so results do not depend on scheduling.
class Accumulator {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Summary {
  double mean = 0.0;
  double std_error = kNaN;
  double max = kNaN;
  std::size_t count = 0;
};

using SampleTable = std::vector<std::vector<double>>;

Summary summarize(const SampleTable& table, std::size_t column) {
  Summary s;
  s.count = table.size();
  if (s.count == 0) return s;
  Accumulator sum;
  s.max = -std::numeric_limits<double>::infinity();
  for (const auto& row : table) {
    sum.add(row[column]);
    s.max = std::max(s.max, row[column]);
  }
  s.mean = sum.value() / static_cast<double>(s.count);
  if (s.count > 1) {
    Accumulator sq;
    for (const auto& row : table) {
      const double d = row[column] - s.mean;
      sq.add(d * d);
    }
    const double var = sq.value() / static_cast<double>(s.count - 1);
    s.std_error = std::sqrt(var / static_cast<double>(s.count));
  }
  return s;
}

// Evaluates `work(i)` for i in [0, count) on a pool of workers and returns the
// results in index order. The first failing index (lowest) wins if several
// samples throw.
template <class Work>
auto parallel_samples(std::size_t count, unsigned threads, Work&& work)
    -> std::vector<decltype(work(std::size_t{}))> {
  using Out = decltype(work(std::size_t{}));
  std::vector<Out> out(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = work(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;

  auto loop = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        out[i] = work(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(loop);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

SeedSpec sample_seed(const ExperimentSpec& spec, std::size_t n, std::size_t i) {
  return {derive_seed(spec.seed, n), i};
}

std::vector<double> sample_eigenvalues(const ExperimentSpec& spec, std::size_t n, std::size_t i) {
  return eigvalsh(sample_wigner(n, spec.off, spec.diag, sample_seed(spec, n, i))).eigenvalues();
}

double semicircle_average(double energy, double eta) {
  return (F_sc(energy + 0.5 * eta) - F_sc(energy - 0.5 * eta)) / eta;
}

ResultRow make_row(std::string series, std::size_t n, double energy, double eta,
                   const Summary& s) {
  ResultRow r;
  r.series = std::move(series);
  r.n = n;
  r.energy = energy;
  r.eta = eta;
  r.mean = s.mean;
  r.std_error = s.std_error;
  r.samples = s.count;
  r.sample_max = s.max;
  return r;
}

void warn_sub_microscopic(ExperimentResult& result, std::size_t n, double eta) {
  const double n_eta = static_cast<double>(n) * eta;
  if (n_eta < kSubMicroscopic) {
    result.warnings.push_back("N=" + std::to_string(n) + " eta=" + shortest(eta) +
                              ": N*eta=" + shortest(n_eta) +
                              " is sub-microscopic; the estimator is heavy-tailed "
                              "(see sample_max)");
  }
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ExperimentResult begin(const ExperimentSpec& spec, ExperimentKind expected) {
  if (spec.kind != expected) {
    throw ConfigError("experiment kind is '" + std::string(to_string(spec.kind)) +
                      "', expected '" + std::string(to_string(expected)) + "'");
  }
  spec.validate();
  ExperimentResult result;
  result.spec = spec;
  result.kernel = std::string(simd::active().name);
  return result;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
  for (const auto& k : kKindNames) {
    if (k.name == text) return k.kind;
  }
  throw ConfigError("unknown experiment kind '" + std::string(text) + "'");
}

std::string_view to_string(EtaScale scale) noexcept {
  switch (scale) {
    case EtaScale::absolute: return "absolute";
    case EtaScale::over_n: return "over_n";
    case EtaScale::over_n_three_halves: return "over_n_three_halves";
  }
  return "unknown";
}

EtaScale parse_eta_scale(std::string_view text) {
  if (text == "absolute") return EtaScale::absolute;
  if (text == "over_n") return EtaScale::over_n;
  if (text == "over_n_three_halves") return EtaScale::over_n_three_halves;
  throw ConfigError("unknown eta scale '" + std::string(text) + "'");
}

double EtaSpec::at(std::size_t n) const noexcept {
  const double nn = static_cast<double>(n);
  switch (scale) {
    case EtaScale::absolute: return value;
    case EtaScale::over_n: return value / nn;
    case EtaScale::over_n_three_halves: return value / (nn * std::sqrt(nn));
  }
  return value;
}

std::string EtaSpec::label() const {
  switch (scale) {
    case EtaScale::absolute: return shortest(value);
    case EtaScale::over_n: return shortest(value) + "/N";
    case EtaScale::over_n_three_halves: return shortest(value) + "/N^1.5";
  }
  return shortest(value);
}

void ExperimentSpec::validate() const {
  require(samples >= 1, "samples must be at least 1");
  require(!n.empty(), "at least one matrix size N is required");
  for (std::size_t size : n) {
    require(size >= 1 && size <= 8192, "matrix size N must lie in [1, 8192]");
  }
  require(off.role() == EntryRole::off_diagonal, "off-diagonal distribution has the wrong role");
  require(diag.role() == EntryRole::diagonal, "diagonal distribution has the wrong role");
  require(kappa > 0.0 && kappa < 2.0, "kappa must lie in (0, 2)");

  const bool uses_energy = kind != ExperimentKind::spacing;
  const bool uses_eta = kind != ExperimentKind::spacing && kind != ExperimentKind::delta_moments;
  if (uses_energy) {
    require(!energies.empty(), "at least one energy is required");
    for (double e : energies) {
      require(std::isfinite(e) && std::abs(e) < 2.0 - kappa,
              "energy " + shortest(e) + " lies outside the bulk window (-2+kappa, 2-kappa) with kappa=" +
                  shortest(kappa));
    }
  }
  if (uses_eta) {
    require(!etas.empty(), "at least one eta is required");
    for (const auto& eta : etas) {
      require(std::isfinite(eta.value) && eta.value > 0.0, "eta must be positive");
    }
  }

  switch (kind) {
    case ExperimentKind::dos:
      require(eta_prime_ratio >= 0.0 && eta_prime_ratio < 1.0,
              "eta_prime_ratio must lie in [0, 1)");
      break;
    case ExperimentKind::wegner:
      for (std::size_t size : n) {
        for (std::size_t k = 1; k < etas.size(); ++k) {
          require(etas[k].at(size) < etas[k - 1].at(size),
                  "wegner scan requires a strictly decreasing eta schedule");
        }
      }
      break;
    case ExperimentKind::derivative:
      require(delta_e > 0.0 && std::isfinite(delta_e), "finite-difference step delta_e must be positive");
      for (std::size_t size : n) {
        for (const auto& eta : etas) {
          require(eta.at(size) <= 1.0 / static_cast<double>(size) * (1.0 + 1e-12),
                  "derivative scan requires eta <= 1/N");
        }
      }
      break;
    case ExperimentKind::delta_moments:
      require(eps > 0.0 && eps <= 1.0, "eps must lie in (0, 1]");
      require(!deltas.empty(), "at least one delta is required");
      for (double d : deltas) require(d > 0.0 && std::isfinite(d), "delta must be positive");
      for (unsigned m : moments) require(m <= 16, "moment orders are limited to 16");
      for (std::size_t size : n) {
        require(size >= 2, "delta moments need N >= 2");
        require(minor_index < size, "minor_index must be smaller than every N");
      }
      break;
    case ExperimentKind::spacing:
      require(bulk_fraction > 0.0 && bulk_fraction < 1.0, "bulk_fraction must lie in (0, 1)");
      break;
    case ExperimentKind::im_stieltjes:
    case ExperimentKind::scale_sweep:
      break;
  }
}

unsigned resolve_thread_count(const RunOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("WIGNERLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    throw ConfigError("WIGNERLAB_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

namespace {

// Shared implementation of the averaged density of states: one row per
// (E, eta) with series name produced by `series_name`.
template <class SeriesName>
ExperimentResult dos_like(const ExperimentSpec& spec, ExperimentKind kind,
                          const RunOptions& options, SeriesName&& series_name) {
  Stopwatch clock;
  ExperimentResult result = begin(spec, kind);
  const unsigned threads = resolve_thread_count(options);
  const bool sandwich = kind == ExperimentKind::dos && spec.eta_prime_ratio > 0.0;

  for (std::size_t n : spec.n) {
    const double nn = static_cast<double>(n);
    auto table = parallel_samples(spec.samples, threads, [&](std::size_t i) {
      const auto mu = sample_eigenvalues(spec, n, i);
      std::vector<double> out;
      for (double e : spec.energies) {
        for (const auto& es : spec.etas) {
          const double eta = es.at(n);
          const double count = static_cast<double>(counting(mu, e - 0.5 * eta, e + 0.5 * eta));
          out.push_back(count / (nn * eta));
          if (sandwich) {
            const double eta_prime = spec.eta_prime_ratio * eta;
            out.push_back(integrated_im_stieltjes(mu, e - 0.5 * eta, e + 0.5 * eta, eta_prime) / eta);
          }
        }
      }
      return out;
    });

    std::size_t col = 0;
    for (double e : spec.energies) {
      for (const auto& es : spec.etas) {
        const double eta = es.at(n);
        ResultRow row = make_row(series_name(es), n, e, eta, summarize(table, col++));
        row.reference = semicircle_average(e, eta);
        row.ratio = row.mean / row.reference;
        result.rows.push_back(row);
        warn_sub_microscopic(result, n, eta);
        if (sandwich) {
          const double eta_prime = spec.eta_prime_ratio * eta;
          ResultRow arc = make_row("arctan", n, e, eta, summarize(table, col++));
          arc.ratio = std::abs(std::numbers::pi * row.mean - arc.mean) * eta / std::sqrt(eta_prime);
          result.rows.push_back(arc);
        }
      }
    }
  }
  result.wall_time_s = clock.seconds();
  return result;
}

}  // namespace

ExperimentResult averaged_dos(const ExperimentSpec& spec, const RunOptions& options) {
  return dos_like(spec, ExperimentKind::dos, options, [](const EtaSpec&) { return std::string("dos"); });
}

ExperimentResult scale_sweep(const ExperimentSpec& spec, const RunOptions& options) {
  return dos_like(spec, ExperimentKind::scale_sweep, options,
                  [](const EtaSpec& es) { return "eta=" + es.label(); });
}

ExperimentResult expected_im_stieltjes(const ExperimentSpec& spec, const RunOptions& options) {
  Stopwatch clock;
  ExperimentResult result = begin(spec, ExperimentKind::im_stieltjes);
  const unsigned threads = resolve_thread_count(options);

  for (std::size_t n : spec.n) {
    auto table = parallel_samples(spec.samples, threads, [&](std::size_t i) {
      const auto mu = sample_eigenvalues(spec, n, i);
      std::vector<double> out;
      for (double e : spec.energies) {
        for (const auto& es : spec.etas) out.push_back(stieltjes(mu, {e, es.at(n)}).imag());
      }
      return out;
    });

    std::size_t col = 0;
    for (double e : spec.energies) {
      for (const auto& es : spec.etas) {
        const double eta = es.at(n);
        ResultRow row = make_row("im_stieltjes", n, e, eta, summarize(table, col++));
        row.reference = m_sc({e, eta}).imag();
        row.ratio = row.mean / row.reference;
        result.rows.push_back(row);

        const double predicted = std::sqrt(std::numbers::pi * rho_sc(e) /
                                           (2.0 * static_cast<double>(n) * eta *
                                            static_cast<double>(spec.samples)));
        if (predicted > 0.2 * row.reference) {
          result.warnings.push_back("N=" + std::to_string(n) + " E=" + shortest(e) + " eta=" +
                                    shortest(eta) + ": predicted standard error " +
                                    shortest(predicted) + " exceeds 20% of the reference");
        }
        warn_sub_microscopic(result, n, eta);
      }
    }
  }
  result.wall_time_s = clock.seconds();
  return result;
}

ExperimentResult wegner_scan(const ExperimentSpec& spec, const RunOptions& options) {
  Stopwatch clock;
  ExperimentResult result = begin(spec, ExperimentKind::wegner);
  const unsigned threads = resolve_thread_count(options);

  for (std::size_t n : spec.n) {
    const double nn = static_cast<double>(n);
    auto table = parallel_samples(spec.samples, threads, [&](std::size_t i) {
      const auto mu = sample_eigenvalues(spec, n, i);
      std::vector<double> out;
      for (double e : spec.energies) {
        for (const auto& es : spec.etas) {
          const double eta = es.at(n);
          const double count = static_cast<double>(counting(mu, e - 0.5 * eta, e + 0.5 * eta));
          out.push_back(count);
          out.push_back(count * count);
        }
      }
      return out;
    });

    std::size_t col = 0;
    for (double e : spec.energies) {
      for (const auto& es : spec.etas) {
        const double eta = es.at(n);
        ResultRow count = make_row("count", n, e, eta, summarize(table, col++));
        count.reference = nn * eta * semicircle_average(e, eta);
        count.ratio = count.mean / (nn * eta);
        ResultRow square = make_row("count_sq", n, e, eta, summarize(table, col++));
        square.ratio = square.mean / (nn * eta);
        result.rows.push_back(count);
        result.rows.push_back(square);
        warn_sub_microscopic(result, n, eta);
      }
    }
  }
  result.wall_time_s = clock.seconds();
  return result;
}

ExperimentResult derivative_scan(const ExperimentSpec& spec, const RunOptions& options) {
  Stopwatch clock;
  ExperimentResult result = begin(spec, ExperimentKind::derivative);
  const unsigned threads = resolve_thread_count(options);

  for (std::size_t n : spec.n) {
    const double nn = static_cast<double>(n);
    const double step = spec.delta_e / nn;
    auto table = parallel_samples(spec.samples, threads, [&](std::size_t i) {
      const auto mu = sample_eigenvalues(spec, n, i);
      std::vector<double> out;
      for (double e : spec.energies) {
        for (const auto& es : spec.etas) {
          const double eta = es.at(n);
          const double up = stieltjes(mu, {e + step, eta}).imag();
          const double down = stieltjes(mu, {e - step, eta}).imag();
          out.push_back((up - down) / (2.0 * step));
        }
      }
      return out;
    });

    std::size_t col = 0;
    for (double e : spec.energies) {
      for (const auto& es : spec.etas) {
        const double eta = es.at(n);
        ResultRow row = make_row("derivative", n, e, eta, summarize(table, col++));
        row.reference = m_sc_derivative({e, eta}).imag();
        row.ratio = std::abs(row.mean) / nn;
        result.rows.push_back(row);
        warn_sub_microscopic(result, n, eta);
      }
    }
  }
  result.wall_time_s = clock.seconds();
  return result;
}

ExperimentResult delta_moments(const ExperimentSpec& spec, const RunOptions& options) {
  Stopwatch clock;
  ExperimentResult result = begin(spec, ExperimentKind::delta_moments);
  const unsigned threads = resolve_thread_count(options);
  const std::size_t per_energy =
      1 + spec.moments.size() * (1 + spec.deltas.size()) + spec.deltas.size();

  for (std::size_t n : spec.n) {
    const double nn = static_cast<double>(n);
    // Per sample and energy: [omega, delta or NaN, moments..., moments x deltas..., beta0 hits...]
    auto table = parallel_samples(spec.samples, threads, [&](std::size_t i) {
      const HermitianMatrix h = sample_wigner(n, spec.off, spec.diag, sample_seed(spec, n, i));
      const auto lambda = eigvalsh(minor(h, spec.minor_index)).eigenvalues();
      std::vector<double> out;
      for (double e : spec.energies) {
        std::optional<IndexSelection> sel;
        if (good_event(lambda, e, spec.eps, n)) {
          try {
            sel = select_indices(lambda, e, spec.eps, n);
          } catch (const PreconditionError&) {
            // Omega holds but beta_0 used up one of only eight eligible
            // eigenvalues; Delta is undefined and the sample counts as outside.
          }
        }
        const double indicator = sel ? 1.0 : 0.0;
        out.push_back(indicator);
        out.push_back(sel ? sel->delta : kNaN);
        for (unsigned m : spec.moments) {
          out.push_back(sel ? std::pow(sel->delta, static_cast<double>(m)) : 0.0);
        }
        for (unsigned m : spec.moments) {
          for (double d : spec.deltas) {
            if (!sel) {
              out.push_back(0.0);
              continue;
            }
            const double nb = static_cast<double>(counting(lambda, e - d / nn, e + d / nn));
            out.push_back(std::pow(sel->delta, static_cast<double>(m)) * nb * nb);
          }
        }
        double nearest = std::numeric_limits<double>::infinity();
        for (double l : lambda) nearest = std::min(nearest, nn * std::abs(l - e));
        for (double d : spec.deltas) out.push_back(nearest <= d ? 1.0 : 0.0);
      }
      return out;
    });

    for (std::size_t ei = 0; ei < spec.energies.size(); ++ei) {
      const double e = spec.energies[ei];
      const std::size_t base = ei * (per_energy + 1);
      std::size_t col = base + 2;

      const Summary omega = summarize(table, base);
      if (omega.mean < 1.0) {
        result.warnings.push_back("N=" + std::to_string(n) + " E=" + shortest(e) +
                                  ": good event failed in " +
                                  shortest((1.0 - omega.mean) * static_cast<double>(omega.count)) +
                                  " samples");
      }

      for (unsigned m : spec.moments) {
        ResultRow row = make_row("omega_delta^" + std::to_string(m), n, e, 0.0,
                                 summarize(table, col++));
        result.rows.push_back(row);
      }
      for (unsigned m : spec.moments) {
        for (double d : spec.deltas) {
          ResultRow row = make_row("omega_delta^" + std::to_string(m) + "_nb^2", n, e, d,
                                   summarize(table, col++));
          result.rows.push_back(row);
        }
      }
      for (double d : spec.deltas) {
        ResultRow row = make_row("p_beta0", n, e, d, summarize(table, col++));
        row.ratio = row.mean / d;
        result.rows.push_back(row);
      }

      std::vector<double> deltas;
      for (const auto& sample : table) {
        if (sample[base] == 1.0) deltas.push_back(sample[base + 1]);
      }
      ResultRow median;
      median.series = "delta_median";
      median.n = n;
      median.energy = e;
      median.samples = deltas.size();
      if (!deltas.empty()) {
        const auto mid = deltas.begin() + static_cast<std::ptrdiff_t>(deltas.size() / 2);
        std::nth_element(deltas.begin(), mid, deltas.end());
        median.mean = *mid;
        if (deltas.size() % 2 == 0) {
          median.mean = 0.5 * (median.mean + *std::max_element(deltas.begin(), mid));
        }
        median.sample_max = *std::max_element(deltas.begin(), deltas.end());
      } else {
        median.mean = kNaN;
      }
      result.rows.push_back(median);
    }
  }
  result.wall_time_s = clock.seconds();
  return result;
}

ExperimentResult spacing(const ExperimentSpec& spec, const RunOptions& options) {
  Stopwatch clock;
  ExperimentResult result = begin(spec, ExperimentKind::spacing);
  const unsigned threads = resolve_thread_count(options);
  const double lo = F_sc_inverse(0.5 - 0.5 * spec.bulk_fraction);
  const double hi = F_sc_inverse(0.5 + 0.5 * spec.bulk_fraction);

  for (std::size_t n : spec.n) {
    auto spacings = parallel_samples(spec.samples, threads, [&](std::size_t i) {
      return unfolded_spacings(sample_eigenvalues(spec, n, i), lo, hi).spacings;
    });

    SampleTable table;
    std::vector<double> pooled;
    std::size_t empty = 0;
    for (const auto& s : spacings) {
      pooled.insert(pooled.end(), s.begin(), s.end());
      if (s.empty()) {
        ++empty;
        continue;
      }
      Accumulator sum;
      double small = 0.0;
      for (double x : s) {
        sum.add(x);
        small += (x < 0.1);
      }
      const double count = static_cast<double>(s.size());
      table.push_back({sum.value() / count, small / count});
    }
    if (empty > 0) {
      result.warnings.push_back("N=" + std::to_string(n) + ": " + std::to_string(empty) +
                                " samples had fewer than two eigenvalues in the window");
    }

    ResultRow mean = make_row("mean_spacing", n, 0.0, 0.0, summarize(table, 0));
    mean.reference = 1.0;
    mean.ratio = mean.mean;
    ResultRow small = make_row("small_fraction", n, 0.0, 0.0, summarize(table, 1));
    small.reference = wigner_surmise_gue_cdf(0.1);
    small.ratio = small.mean / small.reference;
    ResultRow ks;
    ks.series = "ks_surmise";
    ks.n = n;
    ks.samples = pooled.size();
    ks.mean = pooled.empty() ? kNaN : ks_distance_to_surmise(std::move(pooled));
    result.rows.push_back(mean);
    result.rows.push_back(small);
    result.rows.push_back(ks);
  }
  result.wall_time_s = clock.seconds();
  return result;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
  switch (spec.kind) {
    case ExperimentKind::dos: return averaged_dos(spec, options);
    case ExperimentKind::im_stieltjes: return expected_im_stieltjes(spec, options);
    case ExperimentKind::wegner: return wegner_scan(spec, options);
    case ExperimentKind::derivative: return derivative_scan(spec, options);
    case ExperimentKind::scale_sweep: return scale_sweep(spec, options);
    case ExperimentKind::delta_moments: return delta_moments(spec, options);
    case ExperimentKind::spacing: return spacing(spec, options);
  }
  throw ConfigError("unknown experiment kind");
}

}  // namespace wignerlab
