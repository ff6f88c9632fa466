#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <utility>

#include "core/error.hpp"

namespace garank {

using Rational = mpq_class;

// "a/b" or "a"; denominator must be nonzero.
inline Rational rational_from_string(const std::string& text) {
  if (text.empty()) fail(errc::parse_error, "empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) fail(errc::parse_error, "bad rational literal '" + text + "'");
  if (sgn(q.get_den()) == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// Decimal literal "123", "1.25", "15e-4" (exponent sign required by the
// expression lexer, optional here) converted exactly.
inline Rational rational_from_decimal(const std::string& text) {
  std::string digits;
  long exp10 = 0;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') digits += '-';
    ++i;
  }
  bool any = false, dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits += c;
      any = true;
      if (dot) --exp10;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) fail(errc::parse_error, "bad numeric literal '" + text + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    exp10 += std::strtol(text.c_str() + i, nullptr, 10);
    i = text.size();
  }
  if (i != text.size()) fail(errc::parse_error, "bad numeric literal '" + text + "'");
  Rational q(mpz_class(digits.empty() || digits == "-" ? "0" : digits));
  mpz_class pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    q *= Rational(pow);
  else
    q /= Rational(pow);
  q.canonicalize();
  return q;
}

// "num/den" with the denominator always explicit; parses back via
// rational_from_string.
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Complex scalar with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conjugated() const { return {re, -im}; }
  Rational norm_squared() const { return re * re + im * im; }

  GaussianRational inverted() const {
    Rational n2 = norm_squared();
    if (sgn(n2) == 0) fail(errc::singular, "division by zero coefficient");
    return {re / n2, -im / n2};
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverted();
  }
  GaussianRational& operator+=(const GaussianRational& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace garank
