#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "core/matrix.hpp"

namespace garank {

struct MatrixSVD {
  Matrix<FloatComplex> u;              // rows x rows, unitary
  std::vector<double> singular_values; // min(rows, cols), nonincreasing
  Matrix<FloatComplex> v;              // cols x cols, unitary
};

namespace detail {

inline constexpr double kJacobiOffTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 60;

// One-sided Jacobi on the columns of a (rows >= cols): unitary plane
// rotations on the right until every column pair is orthogonal relative to
// its norms, then a = u * diag(sigma) * v^dagger.
inline MatrixSVD one_sided_jacobi(const Matrix<FloatComplex>& a) {
  const int m = a.rows(), n = a.cols();
  Matrix<FloatComplex> w = a;
  Matrix<FloatComplex> v = Matrix<FloatComplex>::identity(n);

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        FloatComplex gamma{0.0, 0.0};
        for (int i = 0; i < m; ++i) {
          alpha += std::norm(w(i, p));
          beta += std::norm(w(i, q));
          gamma += std::conj(w(i, p)) * w(i, q);
        }
        const double g = std::abs(gamma);
        if (alpha == 0.0 || beta == 0.0 || g == 0.0) continue;
        const double rel = g / std::sqrt(alpha * beta);
        off = std::max(off, rel);
        if (rel <= kJacobiOffTol) continue;

        // phase-rotate the pair Gram matrix to real symmetric, then a
        // classic Jacobi rotation on [[alpha, g], [g, beta]]
        const FloatComplex phase = gamma / g;
        const double tau = (beta - alpha) / (2.0 * g);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < m; ++i) {
          const FloatComplex wp = w(i, p), wq = w(i, q);
          w(i, p) = c * wp - s * (std::conj(phase) * wq);
          w(i, q) = s * (phase * wp) + c * wq;
        }
        for (int i = 0; i < n; ++i) {
          const FloatComplex vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * (std::conj(phase) * vq);
          v(i, q) = s * (phase * vp) + c * vq;
        }
      }
    }
    if (off <= kJacobiOffTol) break;
  }

  std::vector<double> sigma(n);
  for (int j = 0; j < n; ++j) {
    double s2 = 0.0;
    for (int i = 0; i < m; ++i) s2 += std::norm(w(i, j));
    sigma[j] = std::sqrt(s2);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sigma[x] > sigma[y]; });

  Matrix<FloatComplex> u(m, m);
  Matrix<FloatComplex> vs(n, n);
  std::vector<double> svals(std::min(m, n));
  std::vector<bool> filled(m, false);
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    if (j < m) svals[j] = sigma[src];
    for (int i = 0; i < n; ++i) vs(i, j) = v(i, src);
    if (j < m && sigma[src] > 0.0) {
      for (int i = 0; i < m; ++i) u(i, j) = w(i, src) / sigma[src];
      filled[j] = true;
    }
  }

  // complete the zero-sigma (and, for tall a, trailing) columns of u to an
  // orthonormal basis: Gram-Schmidt of standard basis vectors, two passes
  for (int j = 0; j < m; ++j) {
    if (filled[j]) continue;
    for (int cand = 0; cand < m; ++cand) {
      std::vector<FloatComplex> col(m, FloatComplex{0.0, 0.0});
      col[cand] = {1.0, 0.0};
      for (int pass = 0; pass < 2; ++pass) {
        for (int k = 0; k < m; ++k) {
          if (!filled[k]) continue;
          FloatComplex proj{0.0, 0.0};
          for (int i = 0; i < m; ++i) proj += std::conj(u(i, k)) * col[i];
          for (int i = 0; i < m; ++i) col[i] -= proj * u(i, k);
        }
      }
      double nrm = 0.0;
      for (int i = 0; i < m; ++i) nrm += std::norm(col[i]);
      nrm = std::sqrt(nrm);
      if (nrm > 0.1) {
        for (int i = 0; i < m; ++i) u(i, j) = col[i] / nrm;
        filled[j] = true;
        break;
      }
    }
    if (!filled[j]) fail(errc::internal, "unitary completion failed");
  }

  return {std::move(u), std::move(svals), std::move(vs)};
}

}  // namespace detail

// SVD a = u * Sigma * v^dagger with nonincreasing singular values; u, v
// unitary. Wide matrices go through the conjugate transpose.
inline MatrixSVD matrix_svd(const Matrix<FloatComplex>& a) {
  if (a.rows() >= a.cols()) return detail::one_sided_jacobi(a);
  MatrixSVD t = detail::one_sided_jacobi(a.conjugate_transpose());
  return {std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

// Numerical rank: singular values above tol * sigma_max.
inline int matrix_rank(const Matrix<FloatComplex>& a, double tol = 1e-10) {
  MatrixSVD svd = matrix_svd(a);
  if (svd.singular_values.empty()) return 0;
  const double cutoff = tol * svd.singular_values.front();
  int r = 0;
  for (double s : svd.singular_values)
    if (s > cutoff && s > 0.0) ++r;
  return r;
}

inline int matrix_rank(const Matrix<GaussianRational>& a, double = 0.0) { return echelon_rank(a); }

}  // namespace garank
