#pragma once

#include "lsrk/numeric.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace lsrk {

// Small dense row-major matrix, 0-based storage.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), v_(std::size_t(rows) * cols, T(0)) {}
  explicit Matrix(int n) : Matrix(n, n) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& operator()(int i, int j) { return v_[std::size_t(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return v_[std::size_t(i) * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T s(0);
    for (int i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix z(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const T& xik = x(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < y.c_; ++j) z(i, j) += xik * y(k, j);
      }
    return z;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    x.check(y);
    for (std::size_t k = 0; k < x.v_.size(); ++k) x.v_[k] += y.v_[k];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    x.check(y);
    for (std::size_t k = 0; k < x.v_.size(); ++k) x.v_[k] -= y.v_[k];
    return x;
  }
  friend Matrix operator*(const T& s, Matrix x) {
    for (auto& e : x.v_) e *= s;
    return x;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.v_ == y.v_;
  }

  // largest |entry|; 0 for an empty matrix
  T maxAbs() const {
    T m(0);
    for (const auto& e : v_)
      if (absValue(e) > m) m = absValue(e);
    return m;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) {
        if constexpr (std::is_same_v<U, double>)
          m(i, j) = toDouble((*this)(i, j));
        else
          m(i, j) = U((*this)(i, j));
      }
    return m;
  }

 private:
  void check(const Matrix& y) const {
    if (r_ != y.r_ || c_ != y.c_) throw std::invalid_argument("matrix sum: shape mismatch");
  }

  int r_ = 0, c_ = 0;
  std::vector<T> v_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& x, const Matrix<T>& y) {
  return x * y - y * x;
}

template <class T>
Matrix<T> power(const Matrix<T>& x, int n) {
  Matrix<T> r = Matrix<T>::identity(x.rows());
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
  assert(int(v.size()) == m.cols());
  std::vector<T> out(m.rows(), T(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

template <class T>
T maxAbsDiff(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
  T m(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    T d = absValue(T(x[i] - y[i]));
    if (d > m) m = d;
  }
  return m;
}

}  // namespace lsrk
