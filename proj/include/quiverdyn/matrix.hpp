#pragma once

#include "quiverdyn/rational.hpp"

#include <stdexcept>
#include <vector>

namespace quiverdyn {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  bool operator==(const Matrix&) const = default;

  bool is_zero() const {
    for (const T& v : e_)
      if (v != 0) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix add: shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix subtract: shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("Matrix-vector: shape mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

/// a b^T - b a^T, the coefficient matrix of d(a.v) ^ d(b.v).
inline RatMatrix wedge_outer(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("wedge_outer: length mismatch");
  RatMatrix m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i] * b[j] - b[i] * a[j];
  return m;
}

}  // namespace quiverdyn
