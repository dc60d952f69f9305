#include "wignerlab/results_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "wignerlab/error.hpp"
#include "wignerlab/format.hpp"

namespace wignerlab {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ConfigError("csv line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
  if (s == "nan") return kNaN;
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

std::size_t parse_size(const std::string& s, std::size_t line_no) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return v;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// JSON field accessors that turn type mismatches into configuration errors.
template <class T>
T get_as(const json& j, std::string_view key) {
  if constexpr (std::is_integral_v<T> && std::is_unsigned_v<T>) {
    if (!j.is_number_unsigned()) {
      throw ConfigError("spec field '" + std::string(key) + "' must be a non-negative integer");
    }
  }
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("spec field '" + std::string(key) + "': " + e.what());
  }
}

template <class T>
std::vector<T> scalar_or_list(const json& j, std::string_view key) {
  if (!j.is_array()) return {get_as<T>(j, key)};
  std::vector<T> out;
  for (const auto& item : j) out.push_back(get_as<T>(item, key));
  return out;
}

std::vector<EtaSpec> etas_from(const json& j, EtaScale default_scale, std::string_view key) {
  std::vector<EtaSpec> out;
  const json list = j.is_array() ? j : json::array({j});
  for (const auto& item : list) {
    if (item.is_object()) {
      EtaSpec es;
      es.value = get_as<double>(item.at("value"), key);
      es.scale = item.contains("scale") ? parse_eta_scale(get_as<std::string>(item.at("scale"), key))
                                        : default_scale;
      out.push_back(es);
    } else {
      out.push_back({get_as<double>(item, key), default_scale});
    }
  }
  return out;
}

}  // namespace

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    for (double x : {r.energy, r.eta, r.mean, r.std_error}) {
      out += ',';
      out += shortest(x);
    }
    out += ',';
    out += std::to_string(r.samples);
    for (double x : {r.reference, r.ratio}) {
      out += ',';
      out += shortest(x);
    }
    out += ',';
    out += csv_field(r.series);
    out += ',';
    out += shortest(r.sample_max);
    out += '\n';
  }
  return out;
}

std::vector<ResultRow> parse_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw ConfigError("csv: unexpected header '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }
    const auto f = split_csv_line(line, line_no);
    if (f.size() != 10) {
      throw ConfigError("csv line " + std::to_string(line_no) + ": expected 10 fields, got " +
                        std::to_string(f.size()));
    }
    ResultRow r;
    r.n = parse_size(f[0], line_no);
    r.energy = parse_double(f[1], line_no);
    r.eta = parse_double(f[2], line_no);
    r.mean = parse_double(f[3], line_no);
    r.std_error = parse_double(f[4], line_no);
    r.samples = parse_size(f[5], line_no);
    r.reference = parse_double(f[6], line_no);
    r.ratio = parse_double(f[7], line_no);
    r.series = f[8];
    r.sample_max = parse_double(f[9], line_no);
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ConfigError("csv: missing header");
  return rows;
}

json to_json(const DistributionSpec& dist) {
  return {{"kind", std::string(to_string(dist.kind()))}, {"params", dist.params()}};
}

DistributionSpec distribution_from_json(const json& j, EntryRole role) {
  if (j.is_string()) return {parse_distribution_kind(get_as<std::string>(j, "dist")), {}, role};
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError("distribution must be a kind name or an object with a 'kind' field");
  }
  std::vector<double> params;
  if (j.contains("params")) params = get_as<std::vector<double>>(j.at("params"), "params");
  return {parse_distribution_kind(get_as<std::string>(j.at("kind"), "kind")), std::move(params), role};
}

json to_json(const ExperimentSpec& spec) {
  json etas = json::array();
  for (const auto& es : spec.etas) {
    etas.push_back({{"value", es.value}, {"scale", std::string(to_string(es.scale))}});
  }
  return {
      {"kind", std::string(to_string(spec.kind))},
      {"n", spec.n},
      {"samples", spec.samples},
      {"energies", spec.energies},
      {"etas", etas},
      {"off", to_json(spec.off)},
      {"diag", to_json(spec.diag)},
      {"seed", spec.seed},
      {"kappa", spec.kappa},
      {"delta_e", spec.delta_e},
      {"eps", spec.eps},
      {"moments", spec.moments},
      {"deltas", spec.deltas},
      {"minor_index", spec.minor_index},
      {"bulk_fraction", spec.bulk_fraction},
      {"eta_prime_ratio", spec.eta_prime_ratio},
  };
}

void merge_spec_json(ExperimentSpec& spec, const json& j) {
  if (!j.is_object()) throw ConfigError("experiment spec must be a JSON object");
  bool etas_reset = false;
  auto add_etas = [&](const json& v, EtaScale scale, std::string_view key) {
    if (!etas_reset) {
      spec.etas.clear();
      etas_reset = true;
    }
    const auto more = etas_from(v, scale, key);
    spec.etas.insert(spec.etas.end(), more.begin(), more.end());
  };

  for (const auto& [key, v] : j.items()) {
    if (key == "kind") {
      spec.kind = parse_experiment_kind(get_as<std::string>(v, key));
    } else if (key == "n") {
      spec.n = scalar_or_list<std::size_t>(v, key);
    } else if (key == "samples") {
      spec.samples = get_as<std::size_t>(v, key);
    } else if (key == "energy" || key == "energies") {
      spec.energies = scalar_or_list<double>(v, key);
    } else if (key == "eta" || key == "etas") {
      add_etas(v, EtaScale::absolute, key);
    } else if (key == "eta_over_n") {
      add_etas(v, EtaScale::over_n, key);
    } else if (key == "eta_over_n_three_halves") {
      add_etas(v, EtaScale::over_n_three_halves, key);
    } else if (key == "dist") {
      if (v.is_object() && (v.contains("off") || v.contains("diag"))) {
        if (v.contains("off")) spec.off = distribution_from_json(v.at("off"), EntryRole::off_diagonal);
        if (v.contains("diag")) spec.diag = distribution_from_json(v.at("diag"), EntryRole::diagonal);
      } else {
        spec.off = distribution_from_json(v, EntryRole::off_diagonal);
        spec.diag = spec.off.with_role(EntryRole::diagonal);
      }
    } else if (key == "off") {
      spec.off = distribution_from_json(v, EntryRole::off_diagonal);
    } else if (key == "diag") {
      spec.diag = distribution_from_json(v, EntryRole::diagonal);
    } else if (key == "seed") {
      spec.seed = get_as<std::uint64_t>(v, key);
    } else if (key == "kappa") {
      spec.kappa = get_as<double>(v, key);
    } else if (key == "delta_e") {
      spec.delta_e = get_as<double>(v, key);
    } else if (key == "eps") {
      spec.eps = get_as<double>(v, key);
    } else if (key == "moments") {
      spec.moments = scalar_or_list<unsigned>(v, key);
    } else if (key == "deltas") {
      spec.deltas = scalar_or_list<double>(v, key);
    } else if (key == "minor_index") {
      spec.minor_index = get_as<std::size_t>(v, key);
    } else if (key == "bulk_fraction") {
      spec.bulk_fraction = get_as<double>(v, key);
    } else if (key == "eta_prime_ratio") {
      spec.eta_prime_ratio = get_as<double>(v, key);
    } else {
      throw ConfigError("unknown spec field '" + key + "'");
    }
  }
}

ExperimentSpec spec_from_json(const json& j) {
  ExperimentSpec spec;
  merge_spec_json(spec, j);
  return spec;
}

json to_json(const ExperimentResult& result) {
  json rows = json::array();
  for (const auto& r : result.rows) {
    rows.push_back({
        {"series", r.series},
        {"n", r.n},
        {"energy", r.energy},
        {"eta", r.eta},
        {"mean", number_or_null(r.mean)},
        {"stderr", number_or_null(r.std_error)},
        {"samples", r.samples},
        {"reference", number_or_null(r.reference)},
        {"ratio", number_or_null(r.ratio)},
        {"sample_max", number_or_null(r.sample_max)},
    });
  }
  return {
      {"spec", to_json(result.spec)},
      {"rows", rows},
      {"warnings", result.warnings},
      {"wall_time_s", result.wall_time_s},
      {"kernel", result.kernel},
      {"version", WIGNERLAB_VERSION},
  };
}

json to_json(const MinorDiagnostics& d) {
  const double n = static_cast<double>(d.lambda.size() + 1);
  double sum_xi = 0.0;
  for (double x : d.xi) sum_xi += x;
  json out = {
      {"j", d.j},
      {"n", d.lambda.size() + 1},
      {"energy", d.energy},
      {"eps", d.eps},
      {"lambda", d.lambda},
      {"xi", d.xi},
      {"sum_xi_over_n", sum_xi / n},
      {"c", d.coeffs.c},
      {"d", d.coeffs.d},
      {"c_prime", d.coeffs.c_prime},
      {"d_prime", d.coeffs.d_prime},
      {"omega", d.omega},
      {"beta", nullptr},
      {"delta", nullptr},
      {"chains_hold", nullptr},
  };
  if (d.selection) {
    out["beta"] = d.selection->beta;
    out["delta"] = d.selection->delta;
    out["chains_hold"] = chains_hold(d.coeffs, *d.selection, d.eps);
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wignerlab
