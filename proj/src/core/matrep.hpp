#pragma once

#include <algorithm>
#include <bit>
#include <utility>
#include <vector>

#include "core/jacobi_svd.hpp"
#include "core/matrix.hpp"
#include "core/multivector.hpp"

namespace garank {

// The fixed recursive representation beta': generators for signature (n,0)
// built by the doubling recursion starting from beta'(e1) = diag(1,-1), then
// the generators p+1..n multiplied by the imaginary unit. blade_table[A] is
// the ordered product of the generator matrices of A.
//
// For odd n the image is the block-diagonal pairs; coefficient extraction
// inverts the representation through trace orthogonality:
//   tr(beta'(e_A)^{-1} beta'(e_B)) = N * delta_AB.
template <class S>
class Representation {
 public:
  using traits = scalar_traits<S>;

  static Representation build(Signature sig) {
    Representation rep(sig);
    rep.build_generators();
    rep.build_blade_table();
    rep.check_invariants();
    return rep;
  }

  const Signature& signature() const { return sig_; }
  int rep_size() const { return sig_.rep_size(); }

  // 1-based generator index
  const Matrix<S>& generator(int a) const { return blades_[std::uint32_t{1} << (a - 1)]; }
  const Matrix<S>& blade_matrix(std::uint32_t mask) const { return blades_[mask]; }

 private:
  explicit Representation(Signature sig) : sig_(sig) {}

  static S imaginary_power(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return traits::from_int(1, 0);
      case 1: return traits::from_int(0, 1);
      case 2: return traits::from_int(-1, 0);
      default: return traits::from_int(0, -1);
    }
  }

  static Matrix<S> embed_diag(const Matrix<S>& g) {
    const int s = g.rows();
    Matrix<S> out(2 * s, 2 * s);
    out.set_block(0, 0, g);
    out.set_block(s, s, g.scaled(traits::from_int(-1)));
    return out;
  }

  void build_generators() {
    const int n = sig_.n();
    gens_.clear();
    Matrix<S> e1(2, 2);
    e1(0, 0) = traits::from_int(1);
    e1(1, 1) = traits::from_int(-1);
    gens_.push_back(e1);

    while (static_cast<int>(gens_.size()) < n) {
      const int built = static_cast<int>(gens_.size());
      const int size = gens_.front().rows();
      if (built % 2 == 1) {
        // built = 2k+1: append the off-diagonal identity generator, same size
        Matrix<S> g(size, size);
        const int h = size / 2;
        for (int i = 0; i < h; ++i) {
          g(i, h + i) = traits::one();
          g(h + i, i) = traits::one();
        }
        gens_.push_back(g);
      } else {
        // built = 2k+2: double every generator to diag(g, -g) and append
        // diag(P, -P) with P = i^{k+1} * product of the old generators
        const int k = (built - 2) / 2;
        Matrix<S> prod = Matrix<S>::identity(size);
        for (const auto& g : gens_) prod = prod * g;
        prod = prod.scaled(imaginary_power(k + 1));
        std::vector<Matrix<S>> doubled;
        doubled.reserve(gens_.size() + 1);
        for (const auto& g : gens_) doubled.push_back(embed_diag(g));
        doubled.push_back(embed_diag(prod));
        gens_ = std::move(doubled);
      }
    }
    // signature adjustment: generators p+1..n pick up a factor i
    for (int a = sig_.p(); a < n; ++a) gens_[a] = gens_[a].scaled(traits::from_int(0, 1));
  }

  void build_blade_table() {
    const std::uint32_t count = sig_.blade_count();
    const int N = sig_.rep_size();
    blades_.clear();
    blades_.reserve(count);
    blades_.push_back(Matrix<S>::identity(N));
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const int low = std::countr_zero(mask);
      blades_.push_back(gens_[low] * blades_[mask ^ (std::uint32_t{1} << low)]);
    }
  }

  void check_invariants() const {
    const int n = sig_.n();
    const int N = sig_.rep_size();
    const Matrix<S> id = Matrix<S>::identity(N);
    for (int a = 1; a <= n; ++a) {
      const Matrix<S>& ga = generator(a);
      if (!(ga.conjugate_transpose() == (sig_.eta(a) < 0 ? ga.scaled(traits::from_int(-1)) : ga)))
        fail(errc::internal, "representation Hermiticity invariant violated");
      for (int b = 1; b <= n; ++b) {
        const Matrix<S>& gb = generator(b);
        Matrix<S> anti = ga * gb + gb * ga;
        Matrix<S> expect = (a == b) ? id.scaled(traits::from_int(2 * sig_.eta(a))) : Matrix<S>(N, N);
        if (!(anti == expect)) fail(errc::internal, "representation anticommutation violated");
      }
    }
  }

  Signature sig_;
  std::vector<Matrix<S>> gens_;
  std::vector<Matrix<S>> blades_;
};

template <class S>
Representation<S> build_representation(Signature sig) {
  return Representation<S>::build(sig);
}

template <class S>
Matrix<S> represent(const Representation<S>& rep, const Multivector<S>& m) {
  if (m.signature() != rep.signature())
    fail(errc::signature_mismatch, "multivector does not match the representation signature");
  Matrix<S> out(rep.rep_size(), rep.rep_size());
  for (const auto& t : m.terms()) {
    const Matrix<S>& bm = rep.blade_matrix(t.first);
    for (int i = 0; i < out.rows(); ++i)
      for (int j = 0; j < out.cols(); ++j) {
        if (!scalar_traits<S>::is_zero(bm(i, j))) out(i, j) += bm(i, j) * t.second;
      }
  }
  return out;
}

namespace detail {

template <class S>
S trace_of_product(const Matrix<S>& b, const Matrix<S>& x) {
  S acc = scalar_traits<S>::zero();
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      if (!scalar_traits<S>::is_zero(b(i, j))) acc += b(i, j) * x(j, i);
    }
  return acc;
}

}  // namespace detail

// Inverse of represent on its image. For odd n the image is the
// block-diagonal pairs; off-diagonal blocks beyond tolerance are rejected.
template <class S>
Multivector<S> unrepresent(const Representation<S>& rep, const Matrix<S>& a, double tol = 1e-9) {
  using traits = scalar_traits<S>;
  const Signature sig = rep.signature();
  const int N = rep.rep_size();
  if (a.rows() != N || a.cols() != N)
    fail(errc::invalid_argument, "matrix size does not match the representation");

  if (sig.n() % 2 == 1) {
    const int h = N / 2;
    bool in_image = true;
    if constexpr (traits::exact_mode) {
      for (int i = 0; i < h && in_image; ++i)
        for (int j = 0; j < h; ++j)
          if (!traits::is_zero(a(i, h + j)) || !traits::is_zero(a(h + i, j))) {
            in_image = false;
            break;
          }
    } else {
      const double off = std::max(a.block(0, h, h, h).max_abs(), a.block(h, 0, h, h).max_abs());
      in_image = off <= tol * std::max(1.0, a.max_abs());
    }
    if (!in_image) fail(errc::not_in_image, "matrix is not block-diagonal (not in the image)");
  }

  std::vector<typename Multivector<S>::term_type> terms;
  for (std::uint32_t mask = 0; mask < sig.blade_count(); ++mask) {
    S val = detail::trace_of_product(rep.blade_matrix(mask), a);
    if (blade_square_sign(mask, sig) < 0) val = traits::negate(val);
    val = traits::times_ratio(val, 1, N);
    if (!traits::is_zero(val)) terms.emplace_back(mask, std::move(val));
  }
  return Multivector<S>::from_terms(sig, std::move(terms));
}

template <class S>
struct GASvd {
  Multivector<S> u;
  Multivector<S> sigma;
  Multivector<S> v;
  // diagonal of beta'(sigma) in matrix order (for odd n: nonincreasing
  // within each block)
  std::vector<double> singular_values;
};

// SVD inside the algebra: factorize beta'(M) (per block for odd n, so the
// factors stay in the image) and pull U, Sigma, V back through unrepresent.
inline GASvd<FloatComplex> svd_ga(const Representation<FloatComplex>& rep,
                                  const Multivector<FloatComplex>& m) {
  const Signature sig = rep.signature();
  const int N = rep.rep_size();
  Matrix<FloatComplex> a = represent(rep, m);

  Matrix<FloatComplex> u(N, N), s(N, N), v(N, N);
  std::vector<double> svals;
  if (sig.n() % 2 == 0) {
    MatrixSVD f = matrix_svd(a);
    u = std::move(f.u);
    v = std::move(f.v);
    svals = f.singular_values;
    for (int i = 0; i < N; ++i) s(i, i) = {svals[i], 0.0};
  } else {
    const int h = N / 2;
    for (int blk = 0; blk < 2; ++blk) {
      MatrixSVD f = matrix_svd(a.block(blk * h, blk * h, h, h));
      u.set_block(blk * h, blk * h, f.u);
      v.set_block(blk * h, blk * h, f.v);
      for (int i = 0; i < h; ++i) {
        s(blk * h + i, blk * h + i) = {f.singular_values[i], 0.0};
        svals.push_back(f.singular_values[i]);
      }
    }
  }
  return {unrepresent(rep, u), unrepresent(rep, s), unrepresent(rep, v), std::move(svals)};
}

template <class S>
GASvd<S> svd_ga(const Representation<S>&, const Multivector<S>&)
  requires scalar_traits<S>::exact_mode
{
  fail(errc::unsupported_mode, "SVD is unsupported in exact mode");
}

}  // namespace garank
