#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qkz/scalar.hpp"

namespace qkz {

struct SingularError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - b.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (size_t j = 0; j < b.c_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = s * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

// First (i,j) in row-major order where a and b differ.
template <class T>
std::optional<std::pair<size_t, size_t>> first_mismatch(const Matrix<T>& a, const Matrix<T>& b) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

// Solves A X = B by Gauss-Jordan; a pivot must be invertible in the ring.
template <class T>
Matrix<T> solve(Matrix<T> A, Matrix<T> B) {
  const size_t n = A.rows();
  if (A.cols() != n || B.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && !is_invertible(A(piv, c))) ++piv;
    if (piv == n) throw SingularError("no invertible pivot in column " + std::to_string(c));
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) std::swap(A(c, j), A(piv, j));
      for (size_t j = 0; j < B.cols(); ++j) std::swap(B(c, j), B(piv, j));
    }
    T inv = T(1) / A(c, c);
    for (size_t j = 0; j < n; ++j) A(c, j) = A(c, j) * inv;
    for (size_t j = 0; j < B.cols(); ++j) B(c, j) = B(c, j) * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(A(r, c))) continue;
      T f = A(r, c);
      for (size_t j = 0; j < n; ++j) A(r, j) = A(r, j) - f * A(c, j);
      for (size_t j = 0; j < B.cols(); ++j) B(r, j) = B(r, j) - f * B(c, j);
    }
  }
  return B;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& A) {
  return solve(A, Matrix<T>::identity(A.rows()));
}

}  // namespace qkz
