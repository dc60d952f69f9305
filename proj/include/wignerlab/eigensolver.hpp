#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wignerlab/hermitian_matrix.hpp"

namespace wignerlab {

/// Eigenvalues in ascending order, optionally with orthonormal eigenvectors.
///
/// Eigenvector k is stored contiguously and pairs with eigenvalue k. Its
/// largest-magnitude component (lowest index on ties) is real and positive.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> eigenvalues);
  Spectrum(std::vector<double> eigenvalues, std::vector<Complex> eigenvectors);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& eigenvalues() const noexcept { return values_; }
  double operator[](std::size_t k) const noexcept { return values_[k]; }

  bool has_eigenvectors() const noexcept { return !vectors_.empty(); }

  /// Eigenvector k (length n). Requires has_eigenvectors().
  std::span<const Complex> eigenvector(std::size_t k) const;

  /// Component i of eigenvector k, i.e. entry (i, k) of the unitary U.
  Complex u(std::size_t i, std::size_t k) const { return vectors_[k * values_.size() + i]; }

 private:
  std::vector<double> values_;
  std::vector<Complex> vectors_;  // row k = eigenvector k
};

/// Full Hermitian eigendecomposition: Householder reduction to a real
/// symmetric tridiagonal matrix followed by implicit QL with Wilkinson
/// shifts. Throws NumericError naming the eigenvalue index that failed to
/// converge within 30 n QL iterations.
Spectrum eigh(const HermitianMatrix& h);

/// Eigenvalues only; skips eigenvector accumulation.
Spectrum eigvalsh(const HermitianMatrix& h);

/// Eigenvalues of a real symmetric tridiagonal matrix (diagonal `d`,
/// sub-diagonal `e` with e.size() + 1 == d.size()), ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e);

/// The (n-1) x (n-1) matrix obtained by deleting row and column j
/// (0-based). Requires n >= 2 and j < n; throws DomainError otherwise.
HermitianMatrix minor(const HermitianMatrix& h, std::size_t j);

}  // namespace wignerlab
