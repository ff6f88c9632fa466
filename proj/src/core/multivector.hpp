#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "core/blade.hpp"
#include "core/scalar.hpp"

namespace garank {

// Sparse multivector over basis blades. Terms are kept sorted by blade mask
// with no zero coefficients, so structural equality is value equality.
// All operations are pure; values are immutable after construction.
template <class S>
class Multivector {
 public:
  using scalar_type = S;
  using traits = scalar_traits<S>;
  using term_type = std::pair<std::uint32_t, S>;

  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector zero(Signature sig) { return Multivector(sig); }

  static Multivector scalar(Signature sig, S value) {
    Multivector m(sig);
    if (!traits::is_zero(value)) m.terms_.emplace_back(0u, std::move(value));
    return m;
  }

  static Multivector basis_blade(Signature sig, std::uint32_t mask, S coeff) {
    if (mask >= sig.blade_count()) fail(errc::out_of_range, "blade mask exceeds dimension");
    Multivector m(sig);
    if (!traits::is_zero(coeff)) m.terms_.emplace_back(mask, std::move(coeff));
    return m;
  }
  static Multivector basis_blade(Signature sig, std::uint32_t mask) {
    return basis_blade(sig, mask, traits::one());
  }

  // Canonicalizes: sorts by mask, combines duplicates, drops zeros.
  static Multivector from_terms(Signature sig, std::vector<term_type> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const term_type& a, const term_type& b) { return a.first < b.first; });
    Multivector m(sig);
    for (auto& t : terms) {
      if (t.first >= sig.blade_count()) fail(errc::out_of_range, "blade mask exceeds dimension");
      if (!m.terms_.empty() && m.terms_.back().first == t.first)
        m.terms_.back().second = m.terms_.back().second + t.second;
      else
        m.terms_.push_back(std::move(t));
    }
    m.prune();
    return m;
  }

  const Signature& signature() const { return sig_; }
  const std::vector<term_type>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(std::uint32_t mask) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), mask,
        [](const term_type& t, std::uint32_t m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask) return it->second;
    return traits::zero();
  }
  S scalar_part() const { return coefficient(0); }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    require_same_signature(a, b);
    Multivector out(a.sig_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
      if (ia->first < ib->first)
        out.terms_.push_back(*ia++);
      else if (ib->first < ia->first)
        out.terms_.push_back(*ib++);
      else {
        out.terms_.emplace_back(ia->first, ia->second + ib->second);
        ++ia, ++ib;
      }
    }
    out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
    out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
    out.prune();
    return out;
  }

  friend Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

  friend Multivector operator-(const Multivector& a) {
    Multivector out(a.sig_);
    out.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) out.terms_.emplace_back(t.first, traits::negate(t.second));
    return out;
  }

  // geometric product
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    require_same_signature(a, b);
    std::vector<S> acc(a.sig_.blade_count(), traits::zero());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        BladeProduct bp = blade_product(ta.first, tb.first, a.sig_);
        S prod = ta.second * tb.second;
        acc[bp.mask] += bp.sign < 0 ? traits::negate(prod) : prod;
      }
    }
    Multivector out(a.sig_);
    for (std::uint32_t mask = 0; mask < acc.size(); ++mask)
      if (!traits::is_zero(acc[mask])) out.terms_.emplace_back(mask, std::move(acc[mask]));
    return out;
  }

  Multivector scaled(const S& c) const {
    Multivector out(sig_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      S v = t.second * c;
      if (!traits::is_zero(v)) out.terms_.emplace_back(t.first, std::move(v));
    }
    return out;
  }

  Multivector grade_projection(int k) const {
    if (k < 0 || k > sig_.n()) fail(errc::out_of_range, "grade out of range");
    Multivector out(sig_);
    for (const auto& t : terms_)
      if (blade_grade(t.first) == k) out.terms_.push_back(t);
    return out;
  }

  // (-1)^k per grade k
  Multivector grade_involution() const {
    return grade_signed([](int k) { return k & 1; });
  }
  // (-1)^(k(k-1)/2) per grade k
  Multivector reversion() const {
    return grade_signed([](int k) { return (k * (k - 1) / 2) & 1; });
  }
  // (-1)^(k(k-1)(k-2)(k-3)/24): negates grades 4..7 mod 8
  Multivector triangle_conjugation() const {
    return grade_signed([](int k) { return (k & 7) >= 4 ? 1 : 0; });
  }

  Multivector complex_conjugation() const {
    Multivector out(sig_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.emplace_back(t.first, traits::conj(t.second));
    return out;
  }

  // M† : every coefficient conjugated, every blade replaced by its inverse
  // (which is blade_square_sign(A) * e_A).
  Multivector hermitian_conjugation() const {
    Multivector out(sig_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      S v = traits::conj(t.second);
      if (blade_square_sign(t.first, sig_) < 0) v = traits::negate(v);
      out.terms_.emplace_back(t.first, std::move(v));
    }
    return out;
  }

  // <M† M>_0 collapses to the coefficient l2 norm: cross terms e_A^{-1} e_B
  // have grade |A xor B| > 0 for A != B, and e_A^{-1} e_A = e.
  typename traits::real_type norm_squared() const {
    typename traits::real_type acc{};
    for (const auto& t : terms_) acc += traits::norm_sq(t.second);
    return acc;
  }
  double norm_approx() const {
    double acc = 0;
    for (const auto& t : terms_) acc += traits::norm_sq_as_double(t.second);
    return std::sqrt(acc);
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

 private:
  template <class GradeParity>
  Multivector grade_signed(GradeParity parity) const {
    Multivector out(sig_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      out.terms_.emplace_back(t.first,
                              parity(blade_grade(t.first)) ? traits::negate(t.second) : t.second);
    return out;
  }

  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const term_type& t) { return traits::is_zero(t.second); }),
                 terms_.end());
  }

  Signature sig_;
  std::vector<term_type> terms_;
};

template <class S>
void require_same_signature(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.signature() != b.signature())
    fail(errc::signature_mismatch, "operands live in different algebras");
}

// (M1, M2) = <M1† M2>_0 = sum_A conj(m1_A) m2_A (only the diagonal blade
// pairs reach grade 0).
template <class S>
S scalar_product(const Multivector<S>& a, const Multivector<S>& b) {
  require_same_signature(a, b);
  using traits = scalar_traits<S>;
  S acc = traits::zero();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      acc += traits::conj(ia->second) * ib->second;
      ++ia, ++ib;
    }
  }
  return acc;
}

// ||M† M - e|| <= tol (exact mode: equality).
template <class S>
bool is_unitary(const Multivector<S>& m, double tol) {
  Multivector<S> diff = m.hermitian_conjugation() * m -
                        Multivector<S>::scalar(m.signature(), scalar_traits<S>::one());
  if constexpr (scalar_traits<S>::exact_mode)
    return diff.is_zero();
  else
    return diff.norm_approx() <= tol;
}

}  // namespace garank
