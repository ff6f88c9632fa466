#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "core/scalar.hpp"

namespace garank {

inline constexpr int kMaxMatrixDim = 64;

// Dense complex matrix, row-major, dimensions <= 64. Scalar follows the
// coefficient mode of the multivectors it mirrors.
template <class S>
class Matrix {
 public:
  using traits = scalar_traits<S>;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(std::size_t(rows) * cols, traits::zero()) {
    if (rows < 0 || cols < 0 || rows > kMaxMatrixDim || cols > kMaxMatrixDim)
      fail(errc::out_of_range, "matrix dimensions must be within 64");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = traits::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(int i, int j) { return d_[std::size_t(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return d_[std::size_t(i) * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = a.d_[i] + b.d_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = a.d_[i] - b.d_[i];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(errc::invalid_argument, "matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (traits::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  Matrix scaled(const S& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] * c;
    return out;
  }

  Matrix conjugate_transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = traits::conj((*this)(i, j));
    return out;
  }

  S trace() const {
    S acc = traits::zero();
    for (int i = 0; i < rows_ && i < cols_; ++i) acc += (*this)(i, i);
    return acc;
  }

  Matrix block(int r0, int c0, int rows, int cols) const {
    Matrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  void set_block(int r0, int c0, const Matrix& b) {
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  double max_abs() const {
    double m = 0;
    for (const auto& v : d_) m = std::max(m, traits::abs_as_double(v));
    return m;
  }
  double max_abs_diff(const Matrix& b) const {
    require_same_shape(b);
    double m = 0;
    for (std::size_t i = 0; i < d_.size(); ++i)
      m = std::max(m, traits::abs_as_double(d_[i] - b.d_[i]));
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      fail(errc::invalid_argument, "matrix shape mismatch");
  }

  int rows_;
  int cols_;
  std::vector<S> d_;
};

// Matrix-side Faddeev-LeVerrier, same sign convention as the multivector
// recursion: A_(1) = A, C_k = tr(A_(k))/k, A_(k+1) = A (A_(k) - C_k I).
template <class S>
std::vector<S> matrix_charpoly(const Matrix<S>& a) {
  using traits = scalar_traits<S>;
  if (!a.is_square()) fail(errc::invalid_argument, "characteristic polynomial needs a square matrix");
  const int N = a.rows();
  std::vector<S> coeffs;
  coeffs.reserve(N);
  Matrix<S> ak = a;
  for (int k = 1; k <= N; ++k) {
    S ck = traits::times_ratio(ak.trace(), 1, k);
    coeffs.push_back(ck);
    if (k < N) {
      Matrix<S> shifted = ak;
      for (int i = 0; i < N; ++i) shifted(i, i) = shifted(i, i) - ck;
      ak = a * shifted;
    }
  }
  return coeffs;
}

namespace detail {

// LU with partial pivoting.
inline FloatComplex lu_det(Matrix<FloatComplex> a) {
  const int n = a.rows();
  FloatComplex det{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(a(i, k));
      if (v > best) best = v, piv = i;
    }
    if (best == 0.0) return {0.0, 0.0};
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      FloatComplex f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

// Bareiss fraction-free elimination; every division is exact.
inline GaussianRational bareiss_det(Matrix<GaussianRational> a) {
  const int n = a.rows();
  if (n == 0) return scalar_traits<GaussianRational>::one();
  GaussianRational prev = scalar_traits<GaussianRational>::one();
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return {};
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  GaussianRational det = a(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace detail

template <class S>
S matrix_det(const Matrix<S>& a) {
  if (!a.is_square()) fail(errc::invalid_argument, "determinant needs a square matrix");
  if constexpr (scalar_traits<S>::exact_mode)
    return detail::bareiss_det(a);
  else
    return detail::lu_det(a);
}

// Exact row-echelon pivot count.
inline int echelon_rank(Matrix<GaussianRational> a) {
  int rank = 0;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < a.rows(); ++i)
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(piv, j));
    GaussianRational inv = a(rank, col).inverted();
    for (int i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      GaussianRational f = a(i, col) * inv;
      for (int j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace garank
