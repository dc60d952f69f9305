#include "wignerlab/hermitian_matrix.hpp"

#include <cmath>

#include "wignerlab/error.hpp"

namespace wignerlab {

HermitianMatrix::HermitianMatrix(std::size_t n) : n_(n), data_(n * n) {}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  HermitianMatrix m(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) m.set_diagonal(j, values[j]);
  return m;
}

void HermitianMatrix::set(std::size_t row, std::size_t col, Complex value) {
  if (row >= n_ || col >= n_) throw DomainError("HermitianMatrix::set: index out of range");
  if (row == col) {
    if (value.imag() != 0.0) throw DomainError("HermitianMatrix::set: diagonal must be real");
    data_[row * n_ + row] = value;
    return;
  }
  data_[row * n_ + col] = value;
  data_[col * n_ + row] = std::conj(value);
}

void HermitianMatrix::set_diagonal(std::size_t j, double value) { set(j, j, Complex(value, 0.0)); }

double HermitianMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t j = 0; j < n_; ++j) t += data_[j * n_ + j].real();
  return t;
}

double HermitianMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool HermitianMatrix::is_hermitian() const noexcept {
  for (std::size_t j = 0; j < n_; ++j) {
    if (data_[j * n_ + j].imag() != 0.0) return false;
    for (std::size_t k = j + 1; k < n_; ++k) {
      if (data_[j * n_ + k] != std::conj(data_[k * n_ + j])) return false;
    }
  }
  return true;
}

}  // namespace wignerlab
