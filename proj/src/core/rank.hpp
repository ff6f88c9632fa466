#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/charpoly.hpp"

namespace garank {

enum class RankPath { general, normal, small_dim };

inline const char* to_string(RankPath p) {
  switch (p) {
    case RankPath::general: return "general";
    case RankPath::normal: return "normal";
    default: return "small_dim";
  }
}

inline constexpr double kDefaultRankTol = 1e-9;
// Routing to the normal-multivector path must be conservative: a nearly
// normal input has no business on it.
inline constexpr double kNormalRoutingTol = 1e-12;

struct RankResult {
  int rank = 0;
  RankPath path = RankPath::general;
  // magnitudes examined by the cascade, in decision order (see JSON docs)
  std::vector<double> examined;
  double tol = 0.0;  // base tolerance (0 in exact mode)
};

inline double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

// ||M† M - M M†|| <= tol (exact mode: equality).
template <class S>
bool is_normal(const Multivector<S>& m, double tol) {
  Multivector<S> md = m.hermitian_conjugation();
  Multivector<S> diff = md * m - m * md;
  if constexpr (scalar_traits<S>::exact_mode)
    return diff.is_zero();
  else
    return diff.norm_approx() <= tol;
}

namespace detail {

template <class S>
double routing_normal_tol(const Multivector<S>& m) {
  const double n2 = m.norm_approx();
  return kNormalRoutingTol * std::max(1.0, n2 * n2);
}

// Unit-normalize in float mode (rank is scale invariant); exact mode keeps
// the value as-is.
template <class S>
Multivector<S> rank_input(const Multivector<S>& m) {
  if constexpr (scalar_traits<S>::exact_mode) {
    return m;
  } else {
    return m.scaled(S{1.0 / m.norm_approx(), 0.0});
  }
}

template <class S>
bool rank_zero_input(const Multivector<S>& m) {
  if constexpr (scalar_traits<S>::exact_mode)
    return m.is_zero();
  else
    return m.norm_approx() <= kZeroNormTol;
}

// decision "C != 0" at cascade level k: exact zero test, or
// |C| > tol * binom(N,k) on the unit-normalized input
template <class S>
bool decide_nonzero(const S& value, int N, int k, double tol, RankResult& res) {
  const double mag = scalar_traits<S>::abs_as_double(value);
  res.examined.push_back(mag);
  if constexpr (scalar_traits<S>::exact_mode)
    return !scalar_traits<S>::is_zero(value);
  else
    return mag > tol * binom(N, k);
}

template <class S>
bool decide_nonzero_mv(const Multivector<S>& value, int N, int k, double tol, RankResult& res) {
  const double mag = value.norm_approx();
  res.examined.push_back(mag);
  if constexpr (scalar_traits<S>::exact_mode)
    return !value.is_zero();
  else
    return mag > tol * binom(N, k);
}

}  // namespace detail

// General coefficient cascade: N if C_(N)(M) != 0; otherwise the largest
// k in {2..N-1} with C_(k)(T) != 0 for T = M†M; floor 1 for nonzero M.
template <class S>
RankResult rank_general(const Multivector<S>& m, double tol = kDefaultRankTol) {
  const int N = m.signature().rep_size();
  RankResult res{0, RankPath::general, {}, scalar_traits<S>::exact_mode ? 0.0 : tol};
  if (detail::rank_zero_input(m)) return res;

  const Multivector<S> mu = detail::rank_input(m);
  CharPoly<S> cp = faddeev_leverrier(mu);
  if (detail::decide_nonzero(cp.coeffs[N - 1], N, N, tol, res)) {
    res.rank = N;
    return res;
  }
  if (N > 2) {
    const Multivector<S> t = mu.hermitian_conjugation() * mu;
    CharPoly<S> cpt = faddeev_leverrier(t);
    // C_(N)(T) recorded alongside C_(N)(M); the determinant identity
    // Det(M†M) = |Det(M)|² ties their vanishing
    res.examined.push_back(scalar_traits<S>::abs_as_double(cpt.coeffs[N - 1]));
    for (int k = N - 1; k >= 2; --k) {
      if (detail::decide_nonzero(cpt.coeffs[k - 1], N, k, tol, res)) {
        res.rank = k;
        return res;
      }
    }
  }
  res.rank = 1;
  return res;
}

// Cascade for normal multivectors: the same shape with C_(k)(M)
// in place of C_(k)(T).
template <class S>
RankResult rank_normal(const Multivector<S>& m, double tol = kDefaultRankTol) {
  if (!is_normal(m, detail::routing_normal_tol(m)))
    fail(errc::not_normal, "rank_normal requires a normal multivector");
  const int N = m.signature().rep_size();
  RankResult res{0, RankPath::normal, {}, scalar_traits<S>::exact_mode ? 0.0 : tol};
  if (detail::rank_zero_input(m)) return res;

  const Multivector<S> mu = detail::rank_input(m);
  CharPoly<S> cp = faddeev_leverrier(mu);
  for (int k = N; k >= 2; --k) {
    if (detail::decide_nonzero(cp.coeffs[k - 1], N, k, tol, res)) {
      res.rank = k;
      return res;
    }
  }
  res.rank = 1;
  return res;
}

// The closed-form conjugation-product tests for n <= 4.
template <class S>
RankResult rank_small_dim_impl(const Multivector<S>& m, double tol, bool use_subject_directly) {
  const Signature sig = m.signature();
  const int n = sig.n();
  const int N = sig.rep_size();
  if (n > 4) fail(errc::out_of_range, "closed-form rank expressions exist only for n <= 4");

  RankResult res{0, RankPath::small_dim, {}, scalar_traits<S>::exact_mode ? 0.0 : tol};
  if (detail::rank_zero_input(m)) return res;
  const Multivector<S> mu = detail::rank_input(m);

  const auto hat = [](const Multivector<S>& x) { return x.grade_involution(); };
  const auto tilde = [](const Multivector<S>& x) { return x.reversion(); };
  const auto th = [](const Multivector<S>& x) { return x.grade_involution().reversion(); };

  if (n <= 2) {
    const Multivector<S> top = (n == 1) ? mu * hat(mu) : mu * th(mu);
    res.rank = detail::decide_nonzero_mv(top, N, N, tol, res) ? N : 1;
    return res;
  }

  // n = 3, 4: N = 4. The four factors M, tilde-hat M, hat M, tilde M play
  // the role of conjugate roots: expanding the degree-4 determinant identity
  //   Det(X) e = X * th(X) * (h(X) t(X))^tri
  // at X = lambda e - T makes the level-k test the ordered elementary
  // symmetric sum over (T, th T, (h T)^tri, (t T)^tri), with the adjacent
  // pair product entering as (h T * t T)^tri. The triangle operation fixes
  // every grade below 4, so the same expressions serve n = 3 unchanged.
  // The top test runs on M itself; the lower levels on T = M†M, or on M
  // again for the normal-multivector variants.
  const Multivector<S> top = mu * th(mu) * (hat(mu) * tilde(mu)).triangle_conjugation();
  if (detail::decide_nonzero_mv(top, N, 4, tol, res)) {
    res.rank = 4;
    return res;
  }

  const Multivector<S> t = use_subject_directly ? mu : mu.hermitian_conjugation() * mu;
  const Multivector<S> x1 = t;
  const Multivector<S> x2 = th(t);
  const Multivector<S> x3 = hat(t).triangle_conjugation();
  const Multivector<S> x4 = tilde(t).triangle_conjugation();
  const Multivector<S> p34 = (hat(t) * tilde(t)).triangle_conjugation();

  const Multivector<S> level3 = x1 * x2 * x3 + x1 * x2 * x4 + x1 * p34 + x2 * p34;
  if (detail::decide_nonzero_mv(level3, N, 3, tol, res)) {
    res.rank = 3;
    return res;
  }
  const Multivector<S> level2 = x1 * x2 + x1 * x3 + x1 * x4 + x2 * x3 + x2 * x4 + p34;
  if (detail::decide_nonzero_mv(level2, N, 2, tol, res)) {
    res.rank = 2;
    return res;
  }
  res.rank = 1;
  return res;
}

template <class S>
RankResult rank_small_dim(const Multivector<S>& m, double tol = kDefaultRankTol) {
  return rank_small_dim_impl(m, tol, /*use_subject_directly=*/false);
}

// Variant for normal multivectors: the T-sums evaluated on M itself.
template <class S>
RankResult rank_small_dim_normal(const Multivector<S>& m, double tol = kDefaultRankTol) {
  if (!is_normal(m, detail::routing_normal_tol(m)))
    fail(errc::not_normal, "the normal-multivector expressions require a normal multivector");
  return rank_small_dim_impl(m, tol, /*use_subject_directly=*/true);
}

// Dispatcher: the normal path skips forming T, so prefer it when the input
// is (strictly) normal.
template <class S>
RankResult rank(const Multivector<S>& m, double tol = kDefaultRankTol) {
  if (is_normal(m, detail::routing_normal_tol(m))) return rank_normal(m, tol);
  return rank_general(m, tol);
}

}  // namespace garank
