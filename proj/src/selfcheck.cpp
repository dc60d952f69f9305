#include "wignerlab/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "wignerlab/eigensolver.hpp"
#include "wignerlab/ensembles.hpp"
#include "wignerlab/minor_diagnostics.hpp"
#include "wignerlab/simd/kernels.hpp"
#include "wignerlab/spectral.hpp"

namespace wignerlab {

namespace {

constexpr std::uint64_t kSeed = 0x5e1fc4ec;

CheckResult make(std::string name, double measured, double tolerance) {
  return {std::move(name), measured <= tolerance, measured, tolerance};
}

CheckResult semicircle_identity() {
  double worst = 0.0;
  for (int k = 0; k <= 380; ++k) {
    const double e = -1.9 + 0.01 * k;
    worst = std::max(worst, std::abs(std::numbers::pi * rho_sc(e) - m_sc({e, 1e-9}).imag()));
  }
  return make("semicircle identity pi*rho_sc = Im m_sc(E+i0)", worst, 1e-6);
}

CheckResult semicircle_mass() {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double mass = ts.integrate([](double e) { return rho_sc(e); }, -2.0, 2.0);
  return make("semicircle normalization |int rho_sc - 1|", std::abs(mass - 1.0), 1e-8);
}

std::vector<CheckResult> eigensolver_residuals() {
  double recon = 0.0, orth = 0.0;
  for (std::size_t n : {8u, 33u, 96u}) {
    const HermitianMatrix h = sample_gue(n, {kSeed, n});
    const Spectrum s = eigh(h);
    double err2 = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Complex v = 0.0, dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          v += s.u(r, k) * s[k] * std::conj(s.u(c, k));
          dot += std::conj(s.u(k, r)) * s.u(k, c);
        }
        err2 += std::norm(h(r, c) - v);
        orth = std::max(orth, std::abs(dot - (r == c ? 1.0 : 0.0)));
      }
    }
    recon = std::max(recon, std::sqrt(err2) / h.frobenius_norm());
  }
  return {make("eigensolver reconstruction |H - U diag U*|_F / |H|_F", recon, 1e-9),
          make("eigensolver orthogonality |U*U - I|_max", orth, 1e-10)};
}

CheckResult interlacing() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const HermitianMatrix h = sample_gue(40, {kSeed + 1, i});
    const Spectrum mu = eigvalsh(h);
    const Spectrum lambda = eigvalsh(minor(h, i));
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      worst = std::max({worst, mu[k] - lambda[k], lambda[k] - mu[k + 1]});
    }
  }
  return make("Cauchy interlacing violation", std::max(worst, 0.0), 1e-10);
}

CheckResult parseval() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const HermitianMatrix h = sample_gue(24, {kSeed + 2, i});
    const Overlaps o = overlaps(h, i);
    double sum = 0.0;
    for (double x : o.xi) sum += x;
    const double target = 24.0 * o.removed_norm2;
    worst = std::max(worst, std::abs(sum - target) / target);
  }
  return make("Parseval sum xi = N |a|^2 (relative)", worst, 1e-10);
}

CheckResult schur() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t n = 4 + i;
    const HermitianMatrix h = sample_gue(n, {kSeed + 3, i});
    const Complex z(-1.5 + 0.15 * static_cast<double>(i), std::pow(10.0, -3.0 + 0.15 * static_cast<double>(i)));
    worst = std::max(worst, schur_resolvent_residual(h, i % n, z));
  }
  return make("Schur resolvent residual", worst, 1e-9);
}

CheckResult chains() {
  std::size_t failures = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const HermitianMatrix h = sample_gue(48, {kSeed + 4, i});
    const MinorDiagnostics d = diagnose(h, i % 48, -1.0 + 0.04 * static_cast<double>(i), 1.0);
    if (d.selection && !chains_hold(d.coeffs, *d.selection, d.eps)) ++failures;
  }
  return make("coefficient inequality chains (failures)", static_cast<double>(failures), 0.0);
}

CheckResult regularity() {
  const auto r = regularity_integrals(DistributionSpec::gaussian(EntryRole::off_diagonal));
  const double worst = std::max({std::abs(r.i6 - 120.0) / 120.0, std::abs(r.i4 - 12.0) / 12.0,
                                 std::abs(r.i2pp - 8.0) / 8.0});
  return make("gaussian regularity integrals I6=120 I4=12 I2pp=8 (relative)", worst, 1e-4);
}

CheckResult simd_agreement() {
  const simd::KernelTable* fast = simd::avx2_kernels();
  const simd::KernelTable& ref = simd::scalar_kernels();
  if (fast == nullptr) return make("SIMD kernels agree with scalar (no AVX2, skipped)", 0.0, 0.0);
  const Spectrum s = eigvalsh(sample_gue(77, {kSeed + 5, 0}));
  const auto& mu = s.eigenvalues();
  double worst = 0.0;
  for (double eta : {1e-4, 1e-2, 1.0}) {
    const auto a = ref.resolvent_sum(mu.size(), mu.data(), 0.1, eta);
    const auto b = fast->resolvent_sum(mu.size(), mu.data(), 0.1, eta);
    worst = std::max({worst, std::abs(a.re - b.re) / (std::abs(a.re) + std::abs(a.im)),
                      std::abs(a.im - b.im) / (std::abs(a.re) + std::abs(a.im))});
  }
  return make("SIMD kernels agree with scalar (relative)", worst, 1e-12);
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out{semicircle_identity(), semicircle_mass()};
  for (auto& c : eigensolver_residuals()) out.push_back(std::move(c));
  for (auto c : {interlacing(), parseval(), schur(), chains(), regularity(), simd_agreement()}) {
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace wignerlab
