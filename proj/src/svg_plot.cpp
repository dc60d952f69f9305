#include "wignerlab/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "wignerlab/error.hpp"
#include "wignerlab/format.hpp"
#include "wignerlab/results_io.hpp"

namespace wignerlab {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;  // legend column
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

enum class Axis { n, eta, energy };

struct Scale {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double unit(double v) const {
    if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    return (v - lo) / (hi - lo);
  }
};

Scale make_scale(const std::vector<double>& values, bool allow_log) {
  Scale s;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!std::isfinite(lo)) return s;
  s.log = allow_log && lo > 0.0 && hi / lo >= 10.0;
  if (s.log) {
    s.lo = lo / 1.25;
    s.hi = hi * 1.25;
    return s;
  }
  if (hi == lo) {
    const double pad = lo == 0.0 ? 1.0 : 0.1 * std::abs(lo);
    s.lo = lo - pad;
    s.hi = hi + pad;
  } else {
    const double pad = 0.08 * (hi - lo);
    s.lo = lo - pad;
    s.hi = hi + pad;
  }
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

double x_of(const ResultRow& r, Axis axis) {
  switch (axis) {
    case Axis::n: return static_cast<double>(r.n);
    case Axis::eta: return r.eta;
    case Axis::energy: return r.energy;
  }
  return 0.0;
}

Axis choose_axis(const std::vector<ResultRow>& rows) {
  std::set<std::size_t> ns;
  std::set<double> etas, energies;
  for (const auto& r : rows) {
    ns.insert(r.n);
    etas.insert(r.eta);
    energies.insert(r.energy);
  }
  if (ns.size() > 1) return Axis::n;
  if (etas.size() > 1) return Axis::eta;
  if (energies.size() > 1) return Axis::energy;
  return Axis::n;
}

}  // namespace

std::string render_svg(const ExperimentResult& result) {
  if (result.rows.empty()) throw DomainError("emit_plot: result has no rows");

  const Axis axis = choose_axis(result.rows);
  std::map<std::string, std::vector<const ResultRow*>> series;
  std::vector<std::string> order;
  std::vector<double> xs, ys;
  for (const auto& r : result.rows) {
    if (!series.count(r.series)) order.push_back(r.series);
    series[r.series].push_back(&r);
    xs.push_back(x_of(r, axis));
    const double se = std::isfinite(r.std_error) ? r.std_error : 0.0;
    ys.push_back(r.mean - se);
    ys.push_back(r.mean + se);
    ys.push_back(r.reference);
  }
  const Scale sx = make_scale(xs, true);
  const Scale sy = make_scale(ys, false);

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + pw * sx.unit(v); };
  auto py = [&](double v) { return kTop + ph * (1.0 - sy.unit(v)); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
      << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"15\">" << escape(to_string(result.spec.kind))
      << "</text>\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"#444\"/>\n";

  // Ticks: five per axis, at decades for a log axis.
  svg << "<g stroke=\"#ddd\" fill=\"#333\">\n";
  std::vector<double> xticks;
  if (sx.log) {
    for (double d = std::pow(10.0, std::ceil(std::log10(sx.lo))); d <= sx.hi; d *= 10.0) xticks.push_back(d);
  } else {
    for (int k = 0; k <= 4; ++k) xticks.push_back(sx.lo + (sx.hi - sx.lo) * k / 4.0);
  }
  for (double t : xticks) {
    svg << "<line x1=\"" << px(t) << "\" y1=\"" << kTop << "\" x2=\"" << px(t) << "\" y2=\""
        << kTop + ph << "\"/><text x=\"" << px(t) << "\" y=\"" << kTop + ph + 16
        << "\" text-anchor=\"middle\" stroke=\"none\">" << fmt(t) << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double t = sy.lo + (sy.hi - sy.lo) * k / 4.0;
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << py(t) << "\" x2=\"" << kLeft + pw << "\" y2=\""
        << py(t) << "\"/><text x=\"" << kLeft - 6 << "\" y=\"" << py(t) + 4
        << "\" text-anchor=\"end\" stroke=\"none\">" << fmt(t) << "</text>\n";
  }
  svg << "</g>\n";
  const char* xlabel = axis == Axis::n ? "N" : axis == Axis::eta ? "eta" : "E";
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">"
      << xlabel << (sx.log ? " (log scale)" : "") << "</text>\n";

  std::size_t colour = 0;
  for (const auto& name : order) {
    auto rows = series[name];
    std::stable_sort(rows.begin(), rows.end(),
                     [&](const ResultRow* a, const ResultRow* b) { return x_of(*a, axis) < x_of(*b, axis); });
    const char* c = kPalette[colour++ % std::size(kPalette)];
    svg << "<g class=\"series\" data-series=\"" << escape(name) << "\">\n";

    std::string ref_path, est_path;
    for (const ResultRow* r : rows) {
      const double x = px(x_of(*r, axis));
      if (std::isfinite(r->reference)) {
        ref_path += (ref_path.empty() ? "M" : " L") + fmt(x) + ' ' + fmt(py(r->reference));
      }
      if (std::isfinite(r->mean)) {
        est_path += (est_path.empty() ? "M" : " L") + fmt(x) + ' ' + fmt(py(r->mean));
      }
    }
    if (!ref_path.empty()) {
      if (ref_path.find('L') == std::string::npos) {
        // single reference value: draw a short horizontal tick across the point
        const ResultRow* r = rows.front();
        const double x = px(x_of(*r, axis));
        svg << "<line class=\"reference\" x1=\"" << x - 30 << "\" y1=\"" << py(r->reference) << "\" x2=\""
            << x + 30 << "\" y2=\"" << py(r->reference) << "\" stroke=\"" << c
            << "\" stroke-dasharray=\"5,4\"/>\n";
      } else {
        svg << "<path class=\"reference\" d=\"" << ref_path << "\" fill=\"none\" stroke=\"" << c
            << "\" stroke-dasharray=\"5,4\"/>\n";
      }
    }
    if (!est_path.empty()) {
      svg << "<path d=\"" << est_path << "\" fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\"/>\n";
    }
    for (const ResultRow* r : rows) {
      if (!std::isfinite(r->mean)) continue;
      const double x = px(x_of(*r, axis));
      if (std::isfinite(r->std_error)) {
        svg << "<line class=\"errorbar\" x1=\"" << x << "\" y1=\"" << py(r->mean - r->std_error)
            << "\" x2=\"" << x << "\" y2=\"" << py(r->mean + r->std_error) << "\" stroke=\"" << c << "\"/>\n";
      }
      svg << "<circle cx=\"" << x << "\" cy=\"" << py(r->mean) << "\" r=\"3.5\" fill=\"" << c << "\">"
          << "<title>" << escape(name) << ": " << shortest(r->mean) << "</title></circle>\n";
    }
    svg << "</g>\n";
  }

  // Legend
  double ly = kTop + 10;
  colour = 0;
  for (const auto& name : order) {
    const char* c = kPalette[colour++ % std::size(kPalette)];
    const double lx = kWidth - kRight + 16;
    svg << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 20 << "\" y2=\"" << ly
        << "\" stroke=\"" << c << "\" stroke-width=\"2\"/><text x=\"" << lx + 26 << "\" y=\"" << ly + 4
        << "\">" << escape(name) << "</text>\n";
    ly += 18;
  }
  svg << "<text x=\"" << kWidth - kRight + 16 << "\" y=\"" << ly + 8
      << "\" fill=\"#555\">dashed: reference</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const ExperimentResult& result, const std::filesystem::path& out) {
  write_text_file(out, render_svg(result));
}

}  // namespace wignerlab
