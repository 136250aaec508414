#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qrdp {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Dimensions in this library are
// small (at most 2^10), so everything is plain contiguous storage with no
// attempt at blocked or sparse kernels.
class ComplexMatrix {
public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  const std::vector<Complex>& entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  // max-entry |a_ij - b_ij|
  double max_abs_diff(const ComplexMatrix& other) const;
  // max-entry |a_ij - conj(a_ji)|
  double hermiticity_deviation() const;
  bool is_hermitian(double tol) const { return hermiticity_deviation() <= tol; }
  bool all_finite() const;

private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

// Kronecker product with A-major blocks: result[(ia*dimB+ib),(ja*dimB+jb)] =
// A(ia,ja) * B(ib,jb). Throws dimension_overflow past the configured maximum.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qrdp
