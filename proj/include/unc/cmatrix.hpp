#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace unc {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const double> diag);
  /// |v><v|
  static CMatrix outer(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  CMatrix adjoint() const;
  Complex trace() const;
  /// max_ij |a_ij|
  double max_abs() const;
  double frobenius_norm() const;
  /// max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const;
  /// (A + A^dagger) / 2
  CMatrix hermitian_part() const;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

}  // namespace unc
