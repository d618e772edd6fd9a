#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cofrob/scalar.hpp"

namespace cofrob {

struct MatrixSolution;

/// Dense matrix over one exact field. Row-major; all solvers use Gaussian
/// elimination with first-nonzero pivot tie-breaking for reproducibility.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(FieldSpec::rationals()) {}
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
      : rows_(rows),
        cols_(cols),
        field_(field),
        data_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(std::size_t n, const FieldSpec& field);
  static Matrix zero(std::size_t rows, std::size_t cols,
                     const FieldSpec& field) {
    return Matrix(rows, cols, field);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_zero() const;

  Matrix col(std::size_t j) const;
  void set_col(std::size_t j, const Matrix& v);
  /// Side-by-side concatenation; row counts must match.
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;

  /// Kronecker product; matches the lexicographic (left-major) convention
  /// used for all tensor product bases in this project.
  Matrix kron(const Matrix& o) const;

  /// Row-major flattening: entry (i, j) goes to row i*cols + j of a
  /// single-column matrix.
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

  std::size_t rank() const;
  Scalar det() const;

  /// Columns form a basis of the null space (possibly zero columns).
  Matrix kernel() const;

  /// Exact solve; empty optional iff b is outside the column space.
  std::optional<MatrixSolution> solve(const Matrix& b) const;

  /// rank([this | v]) == rank(this), i.e. every column of v lies in the
  /// column span.
  bool spans(const Matrix& v) const;

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

struct MatrixSolution {
  Matrix particular;       // one solution of A x = b
  Matrix nullspace_basis;  // columns span ker A
};

/// Reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref_in_place(Matrix& m);

}  // namespace cofrob
