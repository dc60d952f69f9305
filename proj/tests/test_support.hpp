#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "wignerlab/hermitian_matrix.hpp"

namespace wignerlab::testing {

// Dense Hermitian matrix with independent uniform entries, no 1/sqrt(n)
// scaling; deliberately unrelated to the ensemble samplers.
inline HermitianMatrix random_hermitian(std::size_t n, std::uint32_t seed, double scale = 1.0) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  HermitianMatrix h(n);
  for (std::size_t j = 0; j < n; ++j) {
    h.set_diagonal(j, u(gen));
    for (std::size_t k = j + 1; k < n; ++k) h.set(j, k, {u(gen), u(gen)});
  }
  return h;
}

inline std::vector<std::complex<double>> random_complex(std::size_t n, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> g;
  std::vector<std::complex<double>> v(n);
  for (auto& z : v) z = {g(gen), g(gen)};
  return v;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace wignerlab::testing
