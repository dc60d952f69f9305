#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"
#include "wignerlab/ensembles.hpp"
#include "wignerlab/error.hpp"
#include "wignerlab/spectral.hpp"

using namespace wignerlab;
using std::numbers::pi;

TEST_CASE("semicircle density") {
  CHECK(rho_sc(0.0) == doctest::Approx(1.0 / pi).epsilon(1e-15));
  CHECK(rho_sc(2.0) == 0.0);
  CHECK(rho_sc(3.0) == 0.0);
  CHECK(rho_sc(-3.0) == 0.0);
  CHECK(rho_sc(1.0) == doctest::Approx(std::sqrt(3.0) / (2.0 * pi)).epsilon(1e-15));

  boost::math::quadrature::tanh_sinh<double> ts;
  const double mass = ts.integrate([](double e) { return rho_sc(e); }, -2.0, 2.0);
  CHECK(std::abs(mass - 1.0) <= 1e-8);
}

TEST_CASE("pi rho_sc equals the boundary value of Im m_sc") {
  for (double e = -1.9; e <= 1.9 + 1e-12; e += 0.05) {
    CHECK(std::abs(pi * rho_sc(e) - m_sc({e, 1e-9}).imag()) <= 1e-6);
  }
}

TEST_CASE("semicircle Stieltjes transform") {
  const Complex m = m_sc({0.0, 1.0});
  CHECK(std::abs(m - Complex(0.0, (std::sqrt(5.0) - 1.0) / 2.0)) <= 1e-15);
  CHECK(std::abs(m_sc({0.0, 1e-8}).imag() - 1.0) <= 1e-6);

  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> re(-5.0, 5.0);
  std::uniform_real_distribution<double> log_im(-6.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z(re(gen), std::pow(10.0, log_im(gen)));
    const Complex w = m_sc(z);
    CHECK(std::abs(w * w + z * w + 1.0) <= 1e-12);
    CHECK(w.imag() > 0.0);

    const double h = 1e-6 * std::max(1.0, z.imag());
    const Complex fd = (m_sc(z + h) - m_sc(z - h)) / (2.0 * h);
    CHECK(std::abs(fd - m_sc_derivative(z)) <= 1e-5 * std::abs(m_sc_derivative(z)) + 1e-8);
  }
  CHECK_THROWS_AS(m_sc({0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(m_sc({0.0, -1.0}), DomainError);
}

TEST_CASE("semicircle cumulative") {
  CHECK(F_sc(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(F_sc(-2.0) == 0.0);
  CHECK(F_sc(2.0) == 1.0);
  CHECK(F_sc(-3.0) == 0.0);
  CHECK(F_sc(3.0) == 1.0);
  // Independent oracle: the tabulated quadrature of rho_sc over [-1/2, 1/2].
  CHECK(std::abs(F_sc(0.5) - F_sc(-0.5) - 0.31496235752570745) <= 1e-13);

  double prev = -1.0;
  for (double e = -2.5; e <= 2.5; e += 0.01) {
    const double f = F_sc(e);
    CHECK(f >= prev);
    prev = f;
    if (std::abs(e) < 1.99) {
      const double h = 1e-6;
      CHECK(std::abs((F_sc(e + h) - F_sc(e - h)) / (2 * h) - rho_sc(e)) <= 1e-6);
    }
  }
  for (double p : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
    CHECK(std::abs(F_sc(F_sc_inverse(p)) - p) <= 1e-12);
  }
  CHECK_THROWS_AS(F_sc_inverse(1.5), DomainError);
}

TEST_CASE("counting") {
  const Spectrum s(std::vector<double>{-1.0, 0.0, 2.0});
  CHECK(counting(s, -0.5, 2.0) == 2);
  CHECK(counting(s, 3.0, 4.0) == 0);
  CHECK(counting(s, -1.0, 2.0) == 3);
  CHECK(counting(s, 0.0, 0.0) == 1);
  CHECK_THROWS_AS(counting(s, 1.0, 0.0), DomainError);

  // Additivity over a closed-open decomposition of [a, b].
  const Spectrum g = eigvalsh(sample_gue(100, {4, 4}));
  const double a = -1.3, m1 = -0.2, m2 = 0.9, b = 1.7;
  const std::size_t whole = counting(g, a, b);
  const std::size_t left = counting(g, a, m1) - counting(g, m1, m1);
  const std::size_t mid = counting(g, m1, m2) - counting(g, m2, m2);
  CHECK(left + mid + counting(g, m2, b) == whole);
}

TEST_CASE("empirical Stieltjes transform") {
  const Spectrum one(std::vector<double>{1.0});
  CHECK(std::abs(stieltjes(one, {0.0, 1.0}) - Complex(0.5, 0.5)) <= 1e-15);
  const Spectrum two(std::vector<double>{-1.0, 1.0});
  CHECK(std::abs(stieltjes(two, {0.0, 1.0}) - Complex(0.0, 0.5)) <= 1e-15);
  CHECK_THROWS_AS(stieltjes(two, {0.0, 0.0}), DomainError);

  const Spectrum g = eigvalsh(sample_gue(64, {5, 5}));
  for (double eta : {1e-3, 0.05, 1.0}) {
    for (double e = -2.5; e <= 2.5; e += 0.25) {
      const Complex m = stieltjes(g, {e, eta});
      double poisson = 0.0;
      for (double mu : g.eigenvalues()) poisson += eta / ((mu - e) * (mu - e) + eta * eta);
      poisson /= static_cast<double>(g.size());
      CHECK(m.imag() > 0.0);
      CHECK(m.imag() <= 1.0 / eta);
      CHECK(std::abs(m.imag() - poisson) <= 1e-12 * poisson);
    }
  }
}

TEST_CASE("integrated Im m_N matches quadrature") {
  const Spectrum g = eigvalsh(sample_gue(20, {6, 6}));
  const double eta = 0.3;
  const double quad = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double x) { return stieltjes(g, {x, eta}).imag(); }, -0.5, 0.7, 15, 1e-13);
  CHECK(std::abs(integrated_im_stieltjes(g.eigenvalues(), -0.5, 0.7, eta) - quad) <= 1e-10);
}

TEST_CASE("dyadic bound") {
  SUBCASE("single eigenvalue at E") {
    const Spectrum s(std::vector<double>{0.4});
    const auto b = dyadic_bound(s, 0.4, 0.1);
    CHECK(b.lhs == doctest::Approx(1.0 / 0.1));
    CHECK(b.rhs == doctest::Approx(1.0 / 0.1));
    CHECK(b.levels == 0);
  }
  SUBCASE("series stops once the annulus leaves the spectrum") {
    const Spectrum s(std::vector<double>{-1.0, 0.0, 1.0});
    const auto b = dyadic_bound(s, 0.0, 0.1);
    // annuli [0.1, 0.2], [0.2, 0.4], [0.4, 0.8], [0.8, 1.6]; 1.6 > max |mu - E|
    CHECK(b.levels == 4);
    CHECK(b.lhs <= b.rhs);
  }
  SUBCASE("lhs <= rhs on random spectra") {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> e(-2.5, 2.5);
    std::uniform_real_distribution<double> log_eps(-4.0, 0.0);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const Spectrum s = eigvalsh(sample_gue(10 + i, {9, i}));
      const auto b = dyadic_bound(s, e(gen), std::pow(10.0, log_eps(gen)));
      CHECK(b.lhs <= b.rhs);
    }
  }
  CHECK_THROWS_AS(dyadic_bound(Spectrum(std::vector<double>{0.0}), 0.0, 0.0), DomainError);
}

TEST_CASE("sine kernel determinant") {
  const std::vector<double> one{0.3};
  CHECK(sine_kernel_det(one) == 1.0);
  const std::vector<double> same{0.2, 0.2};
  CHECK(std::abs(sine_kernel_det(same)) <= 1e-15);
  const std::vector<double> half{0.0, 0.5};
  CHECK(sine_kernel_det(half) == doctest::Approx(1.0 - 4.0 / (pi * pi)).epsilon(1e-14));

  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> pts(1 + trial % 6);
    for (auto& x : pts) x = u(gen);
    CHECK(sine_kernel_det(pts) >= -1e-12);
  }
  CHECK_THROWS_AS(sine_kernel_det(std::vector<double>(7, 0.0)), PreconditionError);
}

TEST_CASE("GUE joint density") {
  const std::vector<double> coincident{0.4, 0.4};
  CHECK(gue_log_density(coincident, 2) == -std::numeric_limits<double>::infinity());

  const std::vector<double> wide{1.0, -1.0}, narrow{0.5, -0.5};
  CHECK(std::exp(gue_log_density(wide, 2) - gue_log_density(narrow, 2)) ==
        doctest::Approx(4.0 * std::exp(-1.5)).epsilon(1e-14));

  const std::vector<double> p{0.7}, m{-0.7};
  CHECK(gue_log_density(p, 1) == gue_log_density(m, 1));
  CHECK(gue_log_density(p, 1) == doctest::Approx(-0.5 * 0.49));

  std::vector<double> mu{0.3, -1.2, 0.8, 2.1, -0.4};
  const double ref = gue_log_density(mu, 5);
  std::sort(mu.begin(), mu.end());
  do {
    CHECK(gue_log_density(mu, 5) == doctest::Approx(ref).epsilon(1e-14));
  } while (std::next_permutation(mu.begin(), mu.end()));

  CHECK_THROWS_AS(gue_log_density(mu, 4), DomainError);
  CHECK_THROWS_AS(gue_log_density(std::vector<double>(9, 0.0), 9), DomainError);
}

TEST_CASE("GUE normalization agrees with the Selberg-Mehta closed form") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const double nn = static_cast<double>(n);
    double log_z = 0.5 * nn * std::log(2.0 * pi) - 0.5 * nn * nn * std::log(nn);
    for (std::size_t j = 1; j <= n; ++j) log_z += std::lgamma(static_cast<double>(j) + 1.0);
    CHECK(std::abs(gue_log_normalization(n) - log_z) <= 1e-8);
  }
  CHECK_THROWS_AS(gue_log_normalization(4), DomainError);
}

TEST_CASE("unfolded spacings") {
  SUBCASE("semicircle quantiles unfold to unit spacings") {
    const std::size_t n = 200;
    std::vector<double> mu(n);
    for (std::size_t i = 0; i < n; ++i) {
      mu[i] = F_sc_inverse((static_cast<double>(i) + 0.5) / static_cast<double>(n));
    }
    const auto s = unfolded_spacings(mu, -1.5, 1.5);
    CHECK(!s.spacings.empty());
    for (double x : s.spacings) CHECK(std::abs(x - 1.0) <= 1e-8);
  }
  SUBCASE("sparse window gives an empty sample") {
    const std::vector<double> mu{-1.0, 0.0, 1.0};
    CHECK(unfolded_spacings(mu, -0.5, 0.5).spacings.empty());
  }
  SUBCASE("window must be inside the bulk") {
    const std::vector<double> mu{-1.0, 0.0, 1.0};
    CHECK_THROWS_AS(unfolded_spacings(mu, -2.0, 0.5), DomainError);
  }
  SUBCASE("GUE N = 256, central half, 200 samples") {
    const double lo = F_sc_inverse(0.25), hi = F_sc_inverse(0.75);
    std::vector<double> all;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const auto s = unfolded_spacings(eigvalsh(sample_gue(256, {256, i})), lo, hi);
      all.insert(all.end(), s.spacings.begin(), s.spacings.end());
    }
    double mean = 0.0;
    std::size_t small = 0;
    for (double x : all) {
      CHECK(x > 0.0);
      mean += x;
      small += (x < 0.1);
    }
    mean /= static_cast<double>(all.size());
    CHECK(std::abs(mean - 1.0) <= 0.02);
    CHECK(static_cast<double>(small) / static_cast<double>(all.size()) <= 0.01);
    CHECK(ks_distance_to_surmise(all) <= 0.05);
  }
}

TEST_CASE("GUE Wigner surmise") {
  CHECK(wigner_surmise_gue(0.0) == 0.0);
  CHECK_THROWS_AS(wigner_surmise_gue(-0.1), DomainError);

  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double mass = Quad::integrate(wigner_surmise_gue, 0.0, 12.0, 15, 1e-14);
  const double mean =
      Quad::integrate([](double s) { return s * wigner_surmise_gue(s); }, 0.0, 12.0, 15, 1e-14);
  CHECK(std::abs(mass - 1.0) <= 1e-8);
  CHECK(std::abs(mean - 1.0) <= 1e-8);

  const double mode = std::sqrt(pi / 4.0);
  CHECK(wigner_surmise_gue(mode) > wigner_surmise_gue(mode - 1e-4));
  CHECK(wigner_surmise_gue(mode) > wigner_surmise_gue(mode + 1e-4));

  for (double s : {0.1, 0.5, 1.0, 2.0}) {
    const double q = Quad::integrate(wigner_surmise_gue, 0.0, s, 15, 1e-14);
    CHECK(std::abs(wigner_surmise_gue_cdf(s) - q) <= 1e-12);
  }
  CHECK(wigner_surmise_gue_cdf(0.1) == doctest::Approx(0.001072540319922821).epsilon(1e-10));

  const std::vector<double> single{1.0};
  const double f1 = wigner_surmise_gue_cdf(1.0);
  CHECK(ks_distance_to_surmise(single) == doctest::Approx(std::max(f1, 1.0 - f1)));
}
