#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "milnor/rational.hpp"

namespace milnor {

using ComplexVector = std::vector<cplx>;
using RealVector = std::vector<double>;

/// Dense row-major matrix. Only the small shapes that occur here
/// (at most a few dozen rows) are expected.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<std::vector<T>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<T>& v);

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<cplx>;
using RealMatrix = Matrix<double>;

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& columns) {
  if (columns.empty()) return {};
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

template <typename T>
void Matrix<T>::set_column(std::size_t c, const std::vector<T>& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Complex vectors

/// <u, v> = sum_j u_j conj(v_j). Its real part is the Euclidean inner
/// product of u and v viewed in R^{2n}.
cplx hermitian(const ComplexVector& u, const ComplexVector& v);
double norm(const ComplexVector& v);
double norm(const RealVector& v);
ComplexVector scaled(const ComplexVector& v, cplx factor);
ComplexVector conj(const ComplexVector& v);

/// (Re z_1, Im z_1, Re z_2, Im z_2, ...)
RealVector to_real(const ComplexVector& v);
ComplexVector from_real(const RealVector& x);

// ---------------------------------------------------------------------------
// Matrices

RealMatrix real_part(const ComplexMatrix& m);
RealMatrix imag_part(const ComplexMatrix& m);
ComplexMatrix to_complex(const RealMatrix& m);
ComplexMatrix conj(const ComplexMatrix& m);
double frobenius_norm(const RealMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
/// max |a_jk - a_kj|
double asymmetry(const RealMatrix& m);
double asymmetry(const ComplexMatrix& m);

/// LU with partial pivoting.
double determinant(const RealMatrix& m);
cplx determinant(const ComplexMatrix& m);

struct JacobiSettings {
  double tolerance = 1e-14;
  int max_sweeps = 60;
};

/// Singular values in descending order by one-sided (Hestenes) Jacobi
/// rotations. When the matrix has more columns than rows, the trailing
/// cols - rows values are exact zeros.
RealVector singular_values(const RealMatrix& m, const JacobiSettings& settings = {});
RealVector singular_values(const ComplexMatrix& m, const JacobiSettings& settings = {});

/// Eigenvalues of a real symmetric matrix in ascending order (cyclic Jacobi).
/// Only the upper triangle is read.
RealVector symmetric_eigenvalues(const RealMatrix& m, const JacobiSettings& settings = {});

}  // namespace milnor

namespace milnor {

/// Completes an orthonormal family to an orthonormal basis of R^dim
/// (resp. C^dim). Candidates are the standard basis vectors (for C^dim in
/// the order e_1, i e_1, e_2, i e_2, ... when viewed over R); at each step
/// the candidate with the largest residual after projection is taken, ties
/// broken by lower index.
std::vector<RealVector> orthonormal_complement(const std::vector<RealVector>& orthonormal, std::size_t dim);
std::vector<ComplexVector> orthonormal_complement(const std::vector<ComplexVector>& orthonormal, std::size_t dim);

}  // namespace milnor
