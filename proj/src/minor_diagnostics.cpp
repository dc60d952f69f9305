#include "wignerlab/minor_diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wignerlab/eigensolver.hpp"
#include "wignerlab/error.hpp"
#include "wignerlab/simd/kernels.hpp"

namespace wignerlab {

namespace {

void require_eps(double eps, const char* where) {
  if (!(eps > 0.0)) throw DomainError(std::string(where) + ": requires eps > 0");
}

std::vector<Complex> removed_column(const HermitianMatrix& h, std::size_t j) {
  std::vector<Complex> a;
  a.reserve(h.size() - 1);
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k != j) a.push_back(h(k, j));
  }
  return a;
}

}  // namespace

Overlaps overlaps(const HermitianMatrix& h, std::size_t j) {
  const Spectrum spec = eigh(minor(h, j));
  const std::vector<Complex> a = removed_column(h, j);
  const double n = static_cast<double>(h.size());
  const simd::KernelTable& k = simd::active();

  Overlaps out;
  out.lambda = spec.eigenvalues();
  out.xi.resize(spec.size());
  for (std::size_t alpha = 0; alpha < spec.size(); ++alpha) {
    out.xi[alpha] = n * std::norm(k.cdotc(a.size(), spec.eigenvector(alpha).data(), a.data()));
  }
  for (const Complex& z : a) out.removed_norm2 += std::norm(z);
  return out;
}

Complex resolvent_entry_direct(const HermitianMatrix& h, std::size_t j, Complex z) {
  if (!(z.imag() > 0.0)) throw DomainError("resolvent_entry_direct: requires Im z > 0");
  const std::size_t n = h.size();
  if (j >= n) throw DomainError("resolvent_entry_direct: index out of range");
  std::vector<Complex> a(h.data().begin(), h.data().end());
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] -= z;
  std::vector<Complex> x(n, 0.0);
  x[j] = 1.0;

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    if (a[piv * n + c] == 0.0) throw NumericError("resolvent_entry_direct: singular system");
    if (piv != c) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(c * n),
                       a.begin() + static_cast<std::ptrdiff_t>((c + 1) * n),
                       a.begin() + static_cast<std::ptrdiff_t>(piv * n));
      std::swap(x[c], x[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r * n + c] / a[c * n + c];
      if (f == 0.0) continue;
      for (std::size_t col = c; col < n; ++col) a[r * n + col] -= f * a[c * n + col];
      x[r] -= f * x[c];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    Complex s = x[r];
    for (std::size_t col = r + 1; col < n; ++col) s -= a[r * n + col] * x[col];
    x[r] = s / a[r * n + r];
  }
  return x[j];
}

Complex resolvent_entry_schur(const HermitianMatrix& h, std::size_t j, Complex z) {
  if (!(z.imag() > 0.0)) throw DomainError("resolvent_entry_schur: requires Im z > 0");
  if (h.size() == 1) return 1.0 / (h(0, 0) - z);
  const Overlaps ov = overlaps(h, j);
  const double n = static_cast<double>(h.size());
  Complex sum = 0.0;
  for (std::size_t alpha = 0; alpha < ov.lambda.size(); ++alpha) {
    sum += ov.xi[alpha] / (ov.lambda[alpha] - z);
  }
  return 1.0 / (h(j, j) - z - sum / n);
}

double schur_resolvent_residual(const HermitianMatrix& h, std::size_t j, Complex z) {
  return std::abs(resolvent_entry_direct(h, j, z) - resolvent_entry_schur(h, j, z));
}

Coefficients coefficients(std::span<const double> lambda, double energy, double eps,
                          std::size_t dim) {
  require_eps(eps, "coefficients");
  const std::size_t m = lambda.size();
  Coefficients out{std::vector<double>(m), std::vector<double>(m), std::vector<double>(m),
                   std::vector<double>(m)};
  simd::active().coefficients(m, lambda.data(), energy, eps, static_cast<double>(dim),
                              out.c.data(), out.d.data(), out.c_prime.data(), out.d_prime.data());
  return out;
}

bool good_event(std::span<const double> lambda, double energy, double eps, std::size_t dim) {
  if (!(eps > 0.0)) throw PreconditionError("good_event: requires eps > 0");
  const double n = static_cast<double>(dim);
  const auto outside = std::count_if(lambda.begin(), lambda.end(), [&](double l) {
    return n * std::abs(l - energy) >= eps;
  });
  return outside >= 8;
}

IndexSelection select_indices(std::span<const double> lambda, double energy, double eps,
                              std::size_t dim) {
  if (!(eps > 0.0)) throw PreconditionError("select_indices: requires eps > 0");
  if (lambda.empty()) throw PreconditionError("select_indices: empty spectrum");
  const double n = static_cast<double>(dim);
  std::vector<double> dist(lambda.size());
  for (std::size_t a = 0; a < lambda.size(); ++a) dist[a] = n * std::abs(lambda[a] - energy);

  IndexSelection sel;
  sel.beta[0] = static_cast<std::size_t>(std::min_element(dist.begin(), dist.end()) - dist.begin());

  std::vector<std::size_t> eligible;
  for (std::size_t a = 0; a < lambda.size(); ++a) {
    if (a != sel.beta[0] && dist[a] >= eps) eligible.push_back(a);
  }
  if (eligible.size() < 8) {
    throw PreconditionError("select_indices: fewer than eight eigenvalues at distance >= eps/N");
  }
  std::partial_sort(eligible.begin(), eligible.begin() + 8, eligible.end(),
                    [&](std::size_t a, std::size_t b) {
                      return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
                    });
  std::copy_n(eligible.begin(), 8, sel.beta.begin() + 1);
  sel.delta = dist[sel.beta[8]];
  return sel;
}

bool chains_hold(const Coefficients& coeffs, const IndexSelection& sel, double eps) {
  const double delta = sel.delta;
  auto d = [&](std::size_t j) { return std::abs(coeffs.d[sel.beta[j]]); };
  auto c = [&](std::size_t j) { return std::abs(coeffs.c[sel.beta[j]]); };
  if (!(1.0 / (2.0 * delta) <= d(8) && d(1) <= 1.0 / eps)) return false;
  if (!(eps / (2.0 * delta * delta) <= c(8) && c(1) <= 1.0 / eps)) return false;
  for (std::size_t j = 1; j < 8; ++j) {
    if (!(d(j + 1) <= d(j) && c(j + 1) <= c(j))) return false;
  }
  return true;
}

MinorDiagnostics diagnose(const HermitianMatrix& h, std::size_t j, double energy, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("diagnose: eps must lie in (0, 1]");
  MinorDiagnostics out;
  out.j = j;
  out.energy = energy;
  out.eps = eps;
  Overlaps ov = overlaps(h, j);
  out.lambda = std::move(ov.lambda);
  out.xi = std::move(ov.xi);
  out.coeffs = coefficients(out.lambda, energy, eps, h.size());
  out.omega = good_event(out.lambda, energy, eps, h.size());
  if (out.omega) {
    try {
      out.selection = select_indices(out.lambda, energy, eps, h.size());
    } catch (const PreconditionError&) {
      // Exactly eight eigenvalues outside and beta_0 among them.
    }
  }
  return out;
}

TailFit fit_exponential_tail(std::span<const double> values, std::span<const double> thresholds) {
  TailFit fit;
  if (values.empty()) return fit;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double total = static_cast<double>(sorted.size());
  std::vector<double> xs;
  std::vector<double> ys;
  for (double k : thresholds) {
    const auto above = sorted.end() - std::lower_bound(sorted.begin(), sorted.end(), k);
    if (above == 0) continue;
    xs.push_back(k);
    ys.push_back(std::log(static_cast<double>(above) / total));
  }
  fit.points = xs.size();
  if (xs.size() < 2) return fit;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  fit.rate = -slope;
  fit.amplitude = std::exp(my - slope * mx);
  return fit;
}

}  // namespace wignerlab
