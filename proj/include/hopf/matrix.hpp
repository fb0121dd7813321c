#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopf/field.hpp"

namespace hopf {

// Dense row-major matrix over a Field. A linear map V -> W is stored as a
// dim(W) x dim(V) matrix acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  // Rows r0..r0+nr-1 and columns c0..c0+nc-1.
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination, pivot = leftmost nonzero column.
EchelonForm row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of ker m as the columns of a matrix in reduced column echelon form:
// the topmost nonzero entry of each column is 1 and is the only nonzero entry
// of its row.
Matrix kernel_basis(const Matrix& m);

// Coordinates of v in the column span of a matrix in reduced column echelon
// form; nullopt when v is not in the span.
std::optional<Vector> echelon_coordinates(const Matrix& basis, const Vector& v);
// Row index carrying the leading 1 of each column of an echelon basis.
std::vector<std::size_t> echelon_leads(const Matrix& basis);

// One solution of m x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

// Matrix of f (x) g with the left factor most significant.
Matrix tensor_of_maps(const Matrix& f, const Matrix& g);
// Identity on a tensor power of a space of dimension n, exponent k.
std::size_t int_pow(std::size_t n, std::size_t k);

// Order-n primitive root of unity: g^((p-1)/n) for the least primitive root
// g of F_p; over Q only n = 1, 2.
Scalar primitive_root_of_unity(unsigned n, const Field& f);

// Row-major flattening of multi-indices; leftmost factor most significant.
class TensorIndex {
 public:
  explicit TensorIndex(std::vector<std::size_t> factors);
  std::size_t size() const { return size_; }
  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t flatten(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

 private:
  std::vector<std::size_t> factors_;
  std::size_t size_ = 1;
};

// Sparse linear systems: each row is a list of (column, coefficient) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
// One solution of the system (free variables zero) or nullopt if inconsistent.
std::optional<Vector> solve_sparse(const Field& f, std::vector<SparseRow> rows, Vector rhs,
                                   std::size_t cols);

}  // namespace hopf
