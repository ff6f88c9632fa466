#pragma once

#include <cmath>
#include <complex>

#include "core/rational.hpp"

namespace garank {

using FloatComplex = std::complex<double>;

// Uniform access to the two coefficient modes. Arithmetic never mixes modes;
// the traits let one template body serve both.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<FloatComplex> {
  static constexpr bool exact_mode = false;
  using real_type = double;

  static FloatComplex zero() { return {0.0, 0.0}; }
  static FloatComplex one() { return {1.0, 0.0}; }
  static FloatComplex from_int(long re, long im = 0) {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
  static bool is_zero(const FloatComplex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
  static FloatComplex conj(const FloatComplex& z) { return std::conj(z); }
  static real_type norm_sq(const FloatComplex& z) { return std::norm(z); }
  static double norm_sq_as_double(const FloatComplex& z) { return std::norm(z); }
  static double abs_as_double(const FloatComplex& z) { return std::abs(z); }
  static double real_as_double(const FloatComplex& z) { return z.real(); }
  static double imag_as_double(const FloatComplex& z) { return z.imag(); }
  static FloatComplex inverted(const FloatComplex& z) {
    if (is_zero(z)) fail(errc::singular, "division by zero coefficient");
    return 1.0 / z;
  }
  // multiply by the rational num/den (the N/k factor of the FL recursion)
  static FloatComplex times_ratio(const FloatComplex& z, long num, long den) {
    return z * (static_cast<double>(num) / static_cast<double>(den));
  }
  static FloatComplex negate(const FloatComplex& z) { return -z; }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool exact_mode = true;
  using real_type = Rational;

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1), Rational(0)}; }
  static GaussianRational from_int(long re, long im = 0) { return {Rational(re), Rational(im)}; }
  static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
  static GaussianRational conj(const GaussianRational& z) { return z.conjugated(); }
  static real_type norm_sq(const GaussianRational& z) { return z.norm_squared(); }
  static double norm_sq_as_double(const GaussianRational& z) { return z.norm_squared().get_d(); }
  static double abs_as_double(const GaussianRational& z) { return std::sqrt(norm_sq_as_double(z)); }
  static double real_as_double(const GaussianRational& z) { return z.re.get_d(); }
  static double imag_as_double(const GaussianRational& z) { return z.im.get_d(); }
  static GaussianRational inverted(const GaussianRational& z) { return z.inverted(); }
  static GaussianRational times_ratio(const GaussianRational& z, long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return {z.re * r, z.im * r};
  }
  static GaussianRational negate(const GaussianRational& z) { return -z; }
};

}  // namespace garank
