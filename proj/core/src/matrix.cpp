#include "cofrob/matrix.hpp"

namespace cofrob {

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  Matrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  Matrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::col(std::size_t j) const {
  Matrix r(rows_, 1, field_);
  for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

void Matrix::set_col(std::size_t j, const Matrix& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix r(rows_, cols_ + o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
  Matrix r(rows_ + o.rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(rows_ * o.rows_, cols_ * o.cols_, field_);
  for (std::size_t i1 = 0; i1 < rows_; ++i1)
    for (std::size_t j1 = 0; j1 < cols_; ++j1) {
      const Scalar& a = at(i1, j1);
      if (a.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < o.rows_; ++i2)
        for (std::size_t j2 = 0; j2 < o.cols_; ++j2)
          r.at(i1 * o.rows_ + i2, j1 * o.cols_ + j2) = a * o.at(i2, j2);
    }
  return r;
}

Matrix Matrix::vec() const {
  Matrix r(rows_ * cols_, 1, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i * cols_ + j, 0) = at(i, j);
  return r;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1)
    throw std::invalid_argument("unvec shape mismatch");
  Matrix r(rows, cols, v.field());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = v.at(i * cols + j, 0);
  return r;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // first nonzero entry in this column at or below `row`
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return rref_in_place(m).size();
}

Scalar Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  Matrix m = *this;
  Scalar d = Scalar::one(field_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && m.at(p, col).is_zero()) ++p;
    if (p == rows_) return Scalar::zero(field_);
    if (p != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Scalar inv = m.at(col, col).inverse();
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

Matrix Matrix::kernel() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t nfree = cols_ - pivots.size();
  Matrix k(cols_, nfree, field_);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    k.at(free, out) = Scalar::one(field_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k.at(pivots[r], out) = -m.at(r, free);
    ++out;
  }
  return k;
}

std::optional<MatrixSolution> Matrix::solve(const Matrix& b) const {
  if (b.rows() != rows_)
    throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug = hstack(b);
  std::vector<std::size_t> pivots = rref_in_place(aug);
  for (auto p : pivots)
    if (p >= cols_) return std::nullopt;  // inconsistent row
  Matrix x(cols_, b.cols(), field_);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(pivots[r], j) = aug.at(r, cols_ + j);
  return MatrixSolution{x, kernel()};
}

bool Matrix::spans(const Matrix& v) const {
  if (v.rows() != rows_) throw std::invalid_argument("spans: row mismatch");
  return rank() == hstack(v).rank();
}

}  // namespace cofrob
