#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wignerlab/hermitian_matrix.hpp"

namespace wignerlab {

/// Eigenvalues of the minor B = H without row/column j, and the overlaps
/// xi_a = N |<u_a, a>|^2 of its eigenvectors with the removed column
/// a = (h_kj)_{k != j}. N is the dimension of H.
struct Overlaps {
  std::vector<double> lambda;
  std::vector<double> xi;
  double removed_norm2 = 0.0;  // ||a||^2
};

Overlaps overlaps(const HermitianMatrix& h, std::size_t j);

/// (H - z)^{-1}(j, j) by Gaussian elimination on (H - z) x = e_j.
Complex resolvent_entry_direct(const HermitianMatrix& h, std::size_t j, Complex z);

/// (H - z)^{-1}(j, j) = 1 / (h_jj - z - (1/N) sum xi_a / (lambda_a - z)).
Complex resolvent_entry_schur(const HermitianMatrix& h, std::size_t j, Complex z);

/// |direct - Schur| for the (j, j) resolvent entry. Requires Im z > 0.
double schur_resolvent_residual(const HermitianMatrix& h, std::size_t j, Complex z);

/// Per-eigenvalue coefficients of Im m_N(E + i eps/N) in the minor expansion,
/// with y = N (lambda - E):
///   c = eps / (y^2 + eps^2)            d = y / (y^2 + eps^2)
///   c' = 2 eps N y / (y^2 + eps^2)^2   d' = N (y^2 - eps^2) / (y^2 + eps^2)^2
/// where primes are derivatives in E.
struct Coefficients {
  std::vector<double> c;
  std::vector<double> d;
  std::vector<double> c_prime;
  std::vector<double> d_prime;
};

Coefficients coefficients(std::span<const double> lambda, double energy, double eps,
                          std::size_t dim);

/// At least eight minor eigenvalues with N |lambda - E| >= eps.
bool good_event(std::span<const double> lambda, double energy, double eps, std::size_t dim);

struct IndexSelection {
  std::array<std::size_t, 9> beta{};  // beta[0] nearest, beta[1..8] selected
  double delta = 0.0;                 // N |lambda_{beta_8} - E|
};

/// beta_0 = argmin |lambda - E|; beta_1..beta_8 are, in order of distance,
/// the nearest eigenvalues other than beta_0 with N |lambda - E| >= eps.
/// Ties go to the lower index. Throws PreconditionError when fewer than
/// eight such eigenvalues exist (in particular whenever the good event fails).
IndexSelection select_indices(std::span<const double> lambda, double energy, double eps,
                              std::size_t dim);

/// Checks 1/(2 Delta) <= |d_{b8}| <= ... <= |d_{b1}| <= 1/eps and
/// eps/(2 Delta^2) <= |c_{b8}| <= ... <= |c_{b1}| <= 1/eps exactly.
bool chains_hold(const Coefficients& coeffs, const IndexSelection& sel, double eps);

struct MinorDiagnostics {
  std::size_t j = 0;
  double energy = 0.0;
  double eps = 1.0;
  std::vector<double> lambda;
  std::vector<double> xi;
  Coefficients coeffs;
  bool omega = false;
  std::optional<IndexSelection> selection;  // present when omega and selectable
};

/// Full bundle for one (H, j, E, eps); eps must lie in (0, 1].
MinorDiagnostics diagnose(const HermitianMatrix& h, std::size_t j, double energy, double eps);

/// Least-squares fit of log P(xi >= K) = log A - rate K over the thresholds
/// with non-zero empirical survival.
struct TailFit {
  double amplitude = 0.0;
  double rate = 0.0;
  std::size_t points = 0;
};
TailFit fit_exponential_tail(std::span<const double> values, std::span<const double> thresholds);

}  // namespace wignerlab
