#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wignerlab {

using Complex = std::complex<double>;

/// Dense N x N complex Hermitian matrix, row-major.
///
/// Both triangles are stored so that kernels can stream contiguous rows, but
/// the only mutators write h_jk and h_kj together, which keeps
/// h_jk == conj(h_kj) and a real diagonal as exact invariants.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n);

  /// Diagonal matrix from real entries.
  static HermitianMatrix diagonal(std::span<const double> values);

  std::size_t size() const noexcept { return n_; }

  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * n_ + col];
  }

  /// Sets h_jk = value and h_kj = conj(value). For j == k the imaginary part
  /// must be zero.
  void set(std::size_t row, std::size_t col, Complex value);
  void set_diagonal(std::size_t j, double value);

  std::span<const Complex> row(std::size_t r) const noexcept {
    return {data_.data() + r * n_, n_};
  }
  std::span<const Complex> data() const noexcept { return data_; }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;

  /// True when h_jk == conj(h_kj) bit-for-bit and the diagonal is real.
  bool is_hermitian() const noexcept;

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

}  // namespace wignerlab
