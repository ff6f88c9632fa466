#pragma once

#include <cstdint>

#include "core/error.hpp"

namespace garank {

inline constexpr int kMaxDimension = 12;

// Algebra signature (p, q): generators e_1..e_p square to +e, e_{p+1}..e_n
// to -e. N = 2^floor((n+1)/2) is the matrix representation size.
class Signature {
 public:
  Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) fail(errc::invalid_argument, "signature (p,q) must be nonnegative");
    const int n = p + q;
    if (n < 1 || n > kMaxDimension)
      fail(errc::out_of_range, "dimension n=p+q must be between 1 and 12");
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  int rep_size() const { return 1 << ((n() + 1) / 2); }
  std::uint32_t blade_count() const { return std::uint32_t{1} << n(); }

  // metric of generator a (1-based)
  int eta(int a) const { return a <= p_ ? +1 : -1; }
  // bitmask of the generators squaring to -e
  std::uint32_t negative_mask() const {
    return (blade_count() - 1u) & ~((std::uint32_t{1} << p_) - 1u);
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

 private:
  int p_;
  int q_;
};

}  // namespace garank
