#pragma once

// Shared test helpers: deterministic random multivectors in both coefficient
// modes and constructed rank-r inputs built by round-tripping rank-r matrices
// through the representation inverse (per block for odd n, so the matrices
// stay in the image).

#include <random>
#include <vector>

#include "core/matrep.hpp"
#include "core/rank.hpp"
#include "core/runtime.hpp"

namespace garank::testsupport {

using Rng = std::mt19937_64;

inline FloatComplex random_unit_complex(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

inline MvFloat random_float_mv(const Signature& sig, Rng& rng) {
  std::vector<MvFloat::term_type> terms;
  for (std::uint32_t mask = 0; mask < sig.blade_count(); ++mask)
    terms.emplace_back(mask, random_unit_complex(rng));
  return MvFloat::from_terms(sig, std::move(terms));
}

inline Rational random_small_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline MvExact random_exact_mv(const Signature& sig, Rng& rng) {
  std::vector<MvExact::term_type> terms;
  for (std::uint32_t mask = 0; mask < sig.blade_count(); ++mask)
    terms.emplace_back(mask, GaussianRational{random_small_rational(rng),
                                              random_small_rational(rng)});
  return MvExact::from_terms(sig, std::move(terms));
}

// random unitary via two-pass Gram-Schmidt of a random complex matrix
inline Matrix<FloatComplex> random_unitary(int n, Rng& rng) {
  Matrix<FloatComplex> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = random_unit_complex(rng);
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < j; ++k) {
        FloatComplex proj{0, 0};
        for (int i = 0; i < n; ++i) proj += std::conj(a(i, k)) * a(i, j);
        for (int i = 0; i < n; ++i) a(i, j) -= proj * a(i, k);
      }
    double nrm = 0;
    for (int i = 0; i < n; ++i) nrm += std::norm(a(i, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) {
      // resample a degenerate column
      for (int i = 0; i < n; ++i) a(i, j) = random_unit_complex(rng);
      --j;
      continue;
    }
    for (int i = 0; i < n; ++i) a(i, j) /= nrm;
  }
  return a;
}

// rank-r block: U diag(s_1..s_r, 0..) V† with s in [0.9, 1.1] so the nonzero
// spectrum is far from every decision threshold
inline Matrix<FloatComplex> random_rank_r_matrix(int n, int r, Rng& rng) {
  std::uniform_real_distribution<double> s(0.9, 1.1);
  Matrix<FloatComplex> u = random_unitary(n, rng);
  Matrix<FloatComplex> v = random_unitary(n, rng);
  Matrix<FloatComplex> d(n, n);
  for (int i = 0; i < r; ++i) d(i, i) = {s(rng), 0.0};
  return u * d * v.conjugate_transpose();
}

// normal rank-r block: U diag(lambda) U† with |lambda| in [0.9, 1.1]
inline Matrix<FloatComplex> random_normal_rank_r_matrix(int n, int r, Rng& rng) {
  std::uniform_real_distribution<double> mag(0.9, 1.1);
  std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
  Matrix<FloatComplex> u = random_unitary(n, rng);
  Matrix<FloatComplex> d(n, n);
  for (int i = 0; i < r; ++i) {
    const double m = mag(rng), a = arg(rng);
    d(i, i) = {m * std::cos(a), m * std::sin(a)};
  }
  return u * d * u.conjugate_transpose();
}

// split a target rank across the two blocks of an odd-n representation
inline std::pair<int, int> split_rank(int r, int half) {
  const int r1 = std::min(r, half);
  return {r1, r - r1};
}

template <class BlockBuilder>
Matrix<FloatComplex> build_in_image(const Signature& sig, int r, BlockBuilder block) {
  const int N = sig.rep_size();
  if (sig.n() % 2 == 0) return block(N, r);
  const int h = N / 2;
  auto [r1, r2] = split_rank(r, h);
  Matrix<FloatComplex> a(N, N);
  a.set_block(0, 0, block(h, r1));
  a.set_block(h, h, block(h, r2));
  return a;
}

inline MvFloat constructed_rank_float(const Representation<FloatComplex>& rep, int r, Rng& rng) {
  Matrix<FloatComplex> a = build_in_image(
      rep.signature(), r, [&](int n, int rr) { return random_rank_r_matrix(n, rr, rng); });
  return unrepresent(rep, a);
}

inline MvFloat constructed_normal_float(const Representation<FloatComplex>& rep, int r, Rng& rng) {
  Matrix<FloatComplex> a = build_in_image(
      rep.signature(), r, [&](int n, int rr) { return random_normal_rank_r_matrix(n, rr, rng); });
  return unrepresent(rep, a);
}

inline MvFloat random_unitary_mv(const Representation<FloatComplex>& rep, Rng& rng) {
  Matrix<FloatComplex> a = build_in_image(rep.signature(), rep.rep_size(),
                                          [&](int n, int) { return random_unitary(n, rng); });
  return unrepresent(rep, a);
}

// exact rank-r block as B (n x r) * C (r x n) over small rationals; the
// caller verifies the rank with the exact oracle and retries on the measure-
// zero degenerate draws
inline Matrix<GaussianRational> random_exact_rank_r_block(int n, int r, Rng& rng) {
  Matrix<GaussianRational> b(n, r >= 1 ? r : 1), c(r >= 1 ? r : 1, n);
  Matrix<GaussianRational> out(n, n);
  if (r == 0) return out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j)
      b(i, j) = {random_small_rational(rng), random_small_rational(rng)};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      c(i, j) = {random_small_rational(rng), random_small_rational(rng)};
  return b * c;
}

inline MvExact constructed_rank_exact(const Representation<GaussianRational>& rep, int r,
                                      Rng& rng) {
  const Signature sig = rep.signature();
  const int N = rep.rep_size();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix<GaussianRational> a(N, N);
    if (sig.n() % 2 == 0) {
      a = random_exact_rank_r_block(N, r, rng);
    } else {
      const int h = N / 2;
      auto [r1, r2] = split_rank(r, h);
      a.set_block(0, 0, random_exact_rank_r_block(h, r1, rng));
      a.set_block(h, h, random_exact_rank_r_block(h, r2, rng));
    }
    if (echelon_rank(a) == r) return unrepresent(rep, a);
  }
  fail(errc::internal, "could not construct an exact rank-r matrix");
}

inline std::vector<Signature> signatures_with_n(int n) {
  std::vector<Signature> out;
  for (int p = 0; p <= n; ++p) out.emplace_back(p, n - p);
  return out;
}

inline std::vector<Signature> signatures_up_to(int max_n) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p) out.emplace_back(p, n - p);
  return out;
}

}  // namespace garank::testsupport
