#pragma once

// Dense storage and the symmetric eigensolver (Householder tridiagonalization
// followed by implicit-shift QL) shared by the quadrature and eig modules.

#include <cstddef>
#include <span>
#include <vector>

namespace riesz {

/// Row-major dense matrix of doubles.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Largest absolute entry.
  double max_abs() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// y = A x
std::vector<double> multiply(const Matrix& a, std::span<const double> x);

/// Eigen-decomposition of a symmetric matrix: values ascending, and column j
/// of `vectors` is the unit eigenvector of values[j].
struct SymEigResult {
  std::vector<double> values;
  Matrix vectors;
};

/// Throws std::invalid_argument if the matrix is not square or its
/// asymmetry exceeds 1e-14 of the largest entry, and std::runtime_error if
/// the QL iteration fails to converge within 30 * n sweeps.
SymEigResult sym_eig(const Matrix& a);

/// Implicit-shift QL on the symmetric tridiagonal matrix with diagonal `diag`
/// and sub-diagonal `offdiag` (offdiag[i] couples rows i and i+1; size n-1).
/// Every row of `z` (which must have n columns) is rotated along with the
/// iteration: passing the identity yields eigenvectors as columns, passing a
/// single row e_0 yields only the first eigenvector components. On return
/// `diag` holds the eigenvalues, unsorted.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double> offdiag, Matrix& z);

}  // namespace riesz
