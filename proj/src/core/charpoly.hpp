#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/multivector.hpp"

namespace garank {

// After normalizing the argument to unit norm, |Det| below this means
// singular.
inline constexpr double kSingularDetTol = 1e-10;
// Norm below this is treated as the zero multivector in float mode.
inline constexpr double kZeroNormTol = 1e-12;

// Characteristic coefficients C_(1)..C_(N) of Det(lambda*e - M) in the
// convention lambda^N - C_(1) lambda^(N-1) - ... - C_(N); Det(M) = -C_(N).
template <class S>
struct CharPoly {
  Multivector<S> subject;
  std::vector<S> coeffs;   // C_(1) .. C_(N)
  Multivector<S> adjugate; // C_(N-1) - M_(N-1)

  S determinant() const { return scalar_traits<S>::negate(coeffs.back()); }
};

// M_(1) = M, C_(k) = (N/k) <M_(k)>_0, M_(k+1) = M (M_(k) - C_(k)).
// The recursion closes with M_(N) = C_(N) e; a violation beyond tolerance
// signals numerical breakdown.
template <class S>
CharPoly<S> faddeev_leverrier(const Multivector<S>& m) {
  using traits = scalar_traits<S>;
  const Signature sig = m.signature();
  const int N = sig.rep_size();

  CharPoly<S> out{m, {}, Multivector<S>::zero(sig)};
  out.coeffs.reserve(N);
  Multivector<S> mk = m;
  for (int k = 1; k <= N; ++k) {
    S ck = traits::times_ratio(mk.scalar_part(), N, k);
    out.coeffs.push_back(ck);
    if (k == N - 1) out.adjugate = Multivector<S>::scalar(sig, ck) - mk;
    if (k < N) mk = m * (mk - Multivector<S>::scalar(sig, ck));
  }

  Multivector<S> residual = mk - Multivector<S>::scalar(sig, out.coeffs.back());
  if constexpr (traits::exact_mode) {
    if (!residual.is_zero())
      fail(errc::internal, "exact Faddeev-LeVerrier closing identity violated");
  } else {
    const double scale = std::pow(std::max(1.0, m.norm_approx() * std::sqrt(double(N))), N);
    if (!(residual.norm_approx() <= 1e-6 * N * scale))
      fail(errc::numeric_breakdown, "Faddeev-LeVerrier closing identity violated");
  }
  return out;
}

template <class S>
S determinant(const Multivector<S>& m) {
  return faddeev_leverrier(m).determinant();
}

// M^{-1} = Adj(M)/Det(M). Float mode normalizes first and applies the fixed
// |Det| < 1e-10 singularity cutoff; exact mode requires Det != 0.
template <class S>
Multivector<S> inverse(const Multivector<S>& m) {
  using traits = scalar_traits<S>;
  if constexpr (traits::exact_mode) {
    CharPoly<S> cp = faddeev_leverrier(m);
    S det = cp.determinant();
    if (traits::is_zero(det)) fail(errc::singular, "singular multivector");
    return cp.adjugate.scaled(traits::inverted(det));
  } else {
    const double nrm = m.norm_approx();
    if (nrm <= kZeroNormTol) fail(errc::singular, "singular multivector");
    Multivector<S> unit = m.scaled(S{1.0 / nrm, 0.0});
    CharPoly<S> cp = faddeev_leverrier(unit);
    S det = cp.determinant();
    if (traits::abs_as_double(det) < kSingularDetTol)
      fail(errc::singular, "singular multivector");
    return cp.adjugate.scaled(traits::inverted(det)).scaled(S{1.0 / nrm, 0.0});
  }
}

}  // namespace garank
