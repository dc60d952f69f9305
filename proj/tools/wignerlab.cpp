// wignerlab: command-line front end for the Wigner-matrix Monte Carlo
// experiments, the minor diagnostics and the built-in self-check.
//
// Exit status: 0 success, 1 numeric failure or failed check, 2 usage or
// configuration error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wignerlab/ensembles.hpp"
#include "wignerlab/error.hpp"
#include "wignerlab/format.hpp"
#include "wignerlab/harness.hpp"
#include "wignerlab/minor_diagnostics.hpp"
#include "wignerlab/results_io.hpp"
#include "wignerlab/selfcheck.hpp"
#include "wignerlab/svg_plot.hpp"

namespace fs = std::filesystem;
using namespace wignerlab;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

// Flags shared by every experiment subcommand. Optional members stay empty
// unless given on the command line, so they only override the spec file
// where the user asked them to.
struct ExperimentFlags {
  std::string spec_path;
  std::vector<std::size_t> n;
  std::optional<std::size_t> samples;
  std::vector<double> energy;
  std::vector<double> eta;
  std::vector<double> eta_over_n;
  std::vector<double> eta_over_n32;
  std::string dist;
  std::vector<double> dist_params;
  std::optional<std::uint64_t> seed;
  std::optional<double> kappa;
  std::optional<double> delta_e;
  std::optional<double> eps;
  std::vector<unsigned> moments;
  std::vector<double> deltas;
  std::optional<std::size_t> minor_index;
  std::optional<double> bulk_fraction;
  std::optional<double> eta_prime_ratio;

  std::string out;
  std::string format;
  bool plot = false;
  std::string plot_out;
  unsigned threads = 0;
};

void add_output_flags(CLI::App* sub, ExperimentFlags& f) {
  sub->add_option("--out", f.out, "Output file (default: stdout)");
  sub->add_option("--format", f.format, "csv or json (default: from --out extension, else csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--plot", f.plot, "Also write an SVG plot");
  sub->add_option("--plot-out", f.plot_out, "SVG path (default: --out with .svg extension)");
  sub->add_option("--threads", f.threads, "Worker threads (default: WIGNERLAB_THREADS or all cores)");
}

void add_experiment_flags(CLI::App* sub, ExperimentFlags& f, ExperimentKind kind) {
  sub->add_option("--spec", f.spec_path, "ExperimentSpec JSON file; flags override its fields")
      ->check(CLI::ExistingFile);
  sub->add_option("--n", f.n, "Matrix size(s) N");
  sub->add_option("--samples", f.samples, "Monte Carlo sample count M");
  sub->add_option("--seed", f.seed, "Master seed");
  sub->add_option("--dist", f.dist, "Entry distribution: gaussian, gaussian_mixture, smoothed_uniform");
  sub->add_option("--dist-params", f.dist_params, "Distribution parameters");
  sub->add_option("--kappa", f.kappa, "Bulk margin: energies must lie in (-2+kappa, 2-kappa)");
  if (kind != ExperimentKind::spacing) {
    sub->add_option("--energy", f.energy, "Energy or energies E");
  }
  if (kind != ExperimentKind::spacing && kind != ExperimentKind::delta_moments) {
    sub->add_option("--eta", f.eta, "Absolute eta value(s)");
    sub->add_option("--eta-over-n", f.eta_over_n, "eta = value / N");
    sub->add_option("--eta-over-n32", f.eta_over_n32, "eta = value / N^1.5");
  }
  switch (kind) {
    case ExperimentKind::dos:
      sub->add_option("--eta-prime-ratio", f.eta_prime_ratio,
                      "Add the arctangent cross-check at eta' = ratio * eta");
      break;
    case ExperimentKind::derivative:
      sub->add_option("--delta-e", f.delta_e, "Finite-difference step, in units of 1/N");
      break;
    case ExperimentKind::delta_moments:
      sub->add_option("--eps", f.eps, "Good-event radius eps in (0, 1]");
      sub->add_option("--moments", f.moments, "Moment orders of Delta");
      sub->add_option("--deltas", f.deltas, "Window half-widths delta, in units of 1/N");
      sub->add_option("--minor-index", f.minor_index, "Removed row/column (0-based)");
      break;
    case ExperimentKind::spacing:
      sub->add_option("--bulk-fraction", f.bulk_fraction, "Central fraction of the spectrum");
      break;
    default:
      break;
  }
  add_output_flags(sub, f);
}

ExperimentSpec build_spec(const ExperimentFlags& f, ExperimentKind kind) {
  ExperimentSpec spec;
  if (!f.spec_path.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text_file(f.spec_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("spec file '" + f.spec_path + "': " + e.what());
    }
    merge_spec_json(spec, j);
    if (spec.kind != kind) {
      throw ConfigError("spec file declares kind '" + std::string(to_string(spec.kind)) +
                        "' but the subcommand runs '" + std::string(to_string(kind)) + "'");
    }
  }
  spec.kind = kind;
  if (!f.n.empty()) spec.n = f.n;
  if (f.samples) spec.samples = *f.samples;
  if (f.seed) spec.seed = *f.seed;
  if (!f.energy.empty()) spec.energies = f.energy;
  if (!f.eta.empty() || !f.eta_over_n.empty() || !f.eta_over_n32.empty()) {
    spec.etas.clear();
    for (double v : f.eta) spec.etas.push_back({v, EtaScale::absolute});
    for (double v : f.eta_over_n) spec.etas.push_back({v, EtaScale::over_n});
    for (double v : f.eta_over_n32) spec.etas.push_back({v, EtaScale::over_n_three_halves});
  }
  if (!f.dist.empty()) {
    spec.off = DistributionSpec(parse_distribution_kind(f.dist), f.dist_params, EntryRole::off_diagonal);
    spec.diag = spec.off.with_role(EntryRole::diagonal);
  } else if (!f.dist_params.empty()) {
    throw ConfigError("--dist-params requires --dist");
  }
  if (f.kappa) spec.kappa = *f.kappa;
  if (f.delta_e) spec.delta_e = *f.delta_e;
  if (f.eps) spec.eps = *f.eps;
  if (!f.moments.empty()) spec.moments = f.moments;
  if (!f.deltas.empty()) spec.deltas = f.deltas;
  if (f.minor_index) spec.minor_index = *f.minor_index;
  if (f.bulk_fraction) spec.bulk_fraction = *f.bulk_fraction;
  if (f.eta_prime_ratio) spec.eta_prime_ratio = *f.eta_prime_ratio;
  spec.validate();
  return spec;
}

std::string resolve_format(const std::string& format, const std::string& out) {
  if (!format.empty()) return format;
  if (!out.empty() && fs::path(out).extension() == ".json") return "json";
  return "csv";
}

void emit_text(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(out, text);
  }
}

int run_experiment_command(const ExperimentFlags& f, ExperimentKind kind) {
  const ExperimentSpec spec = build_spec(f, kind);
  const ExperimentResult result = run_experiment(spec, RunOptions{f.threads});
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

  const std::string format = resolve_format(f.format, f.out);
  emit_text(f.out, format == "json" ? to_json(result).dump(2) + "\n" : to_csv(result.rows));

  if (f.plot || !f.plot_out.empty()) {
    fs::path svg = f.plot_out;
    if (svg.empty()) {
      svg = f.out.empty() ? fs::path(std::string(to_string(kind)) + ".svg")
                          : fs::path(f.out).replace_extension(".svg");
    }
    emit_plot(result, svg);
    std::cerr << "plot written to " << svg.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wignerlab: numerical laboratory for Wigner random matrices"};
  app.set_version_flag("--version", std::string(WIGNERLAB_VERSION));
  app.require_subcommand(1, 1);

  struct Command {
    const char* name;
    const char* help;
    ExperimentKind kind;
  };
  const Command commands[] = {
      {"dos", "Averaged density of states N[E +- eta/2] / (N eta)", ExperimentKind::dos},
      {"stieltjes", "Expected Im m_N(E + i eta) against Im m_sc", ExperimentKind::im_stieltjes},
      {"wegner", "Wegner scan: E N and E N^2 over N eta", ExperimentKind::wegner},
      {"deriv", "Common-random-number derivative of E Im m_N in E", ExperimentKind::derivative},
      {"sweep", "Averaged density of states over (N, eta schedule)", ExperimentKind::scale_sweep},
      {"spacing", "Unfolded bulk spacings against the GUE Wigner surmise", ExperimentKind::spacing},
      {"delta", "Moments of Delta and small-distance probabilities on minors",
       ExperimentKind::delta_moments},
  };
  std::vector<ExperimentFlags> flags(std::size(commands));
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].help);
    add_experiment_flags(sub, flags[i], commands[i].kind);
    subs.push_back(sub);
  }

  // diagnostics
  CLI::App* diag_cmd = app.add_subcommand("diagnostics", "Minor diagnostics for one sampled matrix");
  std::size_t diag_n = 64, diag_j = 0;
  double diag_energy = 0.0, diag_eps = 1.0;
  std::uint64_t diag_seed = 0, diag_stream = 0;
  std::string diag_dist = "gaussian", diag_out;
  std::vector<double> diag_params;
  diag_cmd->add_option("--n", diag_n, "Matrix size N")->check(CLI::Range(std::size_t{2}, std::size_t{8192}));
  diag_cmd->add_option("--j", diag_j, "Removed row/column (0-based)");
  diag_cmd->add_option("--energy", diag_energy, "Energy E");
  diag_cmd->add_option("--eps", diag_eps, "eps in (0, 1]");
  diag_cmd->add_option("--seed", diag_seed, "Master seed");
  diag_cmd->add_option("--stream", diag_stream, "Sample index within the seed");
  diag_cmd->add_option("--dist", diag_dist, "Entry distribution");
  diag_cmd->add_option("--dist-params", diag_params, "Distribution parameters");
  diag_cmd->add_option("--out", diag_out, "Output JSON file (default: stdout)");

  // regularity
  CLI::App* reg_cmd = app.add_subcommand("regularity", "Regularity integrals of an entry density");
  std::string reg_dist = "gaussian", reg_role = "off_diagonal", reg_format = "text";
  std::vector<double> reg_params;
  reg_cmd->add_option("--dist", reg_dist, "Entry distribution");
  reg_cmd->add_option("--dist-params", reg_params, "Distribution parameters");
  reg_cmd->add_option("--role", reg_role, "off_diagonal (variance 1/2) or diagonal (variance 1)");
  reg_cmd->add_option("--format", reg_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* check_cmd = app.add_subcommand("check", "Run the built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) return run_experiment_command(flags[i], commands[i].kind);
    }

    if (diag_cmd->parsed()) {
      const DistributionSpec off(parse_distribution_kind(diag_dist), diag_params, EntryRole::off_diagonal);
      const HermitianMatrix h =
          sample_wigner(diag_n, off, off.with_role(EntryRole::diagonal), {derive_seed(diag_seed, diag_n), diag_stream});
      const MinorDiagnostics d = diagnose(h, diag_j, diag_energy, diag_eps);
      emit_text(diag_out, to_json(d).dump(2) + "\n");
      return 0;
    }

    if (reg_cmd->parsed()) {
      const DistributionSpec dist(parse_distribution_kind(reg_dist), reg_params, parse_entry_role(reg_role));
      const RegularityIntegrals r = regularity_integrals(dist);
      if (reg_format == "json") {
        std::cout << nlohmann::json{{"dist", to_json(dist)},
                                    {"role", std::string(to_string(dist.role()))},
                                    {"I6", r.i6},
                                    {"I4", r.i4},
                                    {"I2pp", r.i2pp}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "I6=" << shortest(r.i6) << '\n'
                  << "I4=" << shortest(r.i4) << '\n'
                  << "I2pp=" << shortest(r.i2pp) << '\n';
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      bool ok = true;
      for (const auto& c : run_selfcheck()) {
        std::printf("%s  %-62s measured=%-12.4g tol=%.1g\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                    c.measured, c.tolerance);
        ok = ok && c.passed;
      }
      return ok ? 0 : kExitNumeric;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
