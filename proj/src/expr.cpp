#include "core/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace garank {

namespace {

struct Token {
  enum class Kind { number, blade, op, end };
  Kind kind = Kind::end;
  std::size_t pos = 0;
  char op = 0;                // one of + - * / ( ) ' ^ ! ~ #
  std::string lexeme;         // number text (without the i suffix)
  bool imaginary = false;     // number carried an i suffix, or bare i
  std::vector<int> indices;   // blade
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  fail(errc::parse_error, "syntax error at position " + std::to_string(pos + 1) + ": " + what);
}

class Lexer {
 public:
  Lexer(const std::string& text, const Signature& sig) : text_(text), sig_(sig) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.kind = Token::Kind::end;
      return;
    }
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && digit_at(i_ + 1))) {
      lex_number();
      return;
    }
    if (c == 'i' && !std::isalnum(static_cast<unsigned char>(peek_char(i_ + 1)))) {
      tok_.kind = Token::Kind::number;
      tok_.lexeme = "1";
      tok_.imaginary = true;
      ++i_;
      return;
    }
    if (c == 'e') {
      lex_blade();
      return;
    }
    if (std::string("+-*/()'^!~#").find(c) != std::string::npos) {
      tok_.kind = Token::Kind::op;
      tok_.op = c;
      ++i_;
      return;
    }
    syntax_error(i_, std::string("unexpected character '") + c + "'");
  }

  bool digit_at(std::size_t j) const {
    return j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]));
  }
  char peek_char(std::size_t j) const { return j < text_.size() ? text_[j] : '\0'; }

  void lex_number() {
    const std::size_t start = i_;
    while (digit_at(i_)) ++i_;
    if (peek_char(i_) == '.') {
      ++i_;
      while (digit_at(i_)) ++i_;
    }
    // an exponent must carry an explicit sign so that "2e3" stays a syntax
    // error rather than silently meaning 2000 or 2*e3
    if ((peek_char(i_) == 'e' || peek_char(i_) == 'E') &&
        (peek_char(i_ + 1) == '+' || peek_char(i_ + 1) == '-') && digit_at(i_ + 2)) {
      i_ += 2;
      while (digit_at(i_)) ++i_;
    }
    tok_.kind = Token::Kind::number;
    tok_.lexeme = text_.substr(start, i_ - start);
    if (peek_char(i_) == 'i' && !std::isalnum(static_cast<unsigned char>(peek_char(i_ + 1)))) {
      tok_.imaginary = true;
      ++i_;
    }
  }

  void lex_blade() {
    const std::size_t start = i_;
    ++i_;  // 'e'
    tok_.kind = Token::Kind::blade;
    if (peek_char(i_) == '[') {
      ++i_;
      while (true) {
        if (!digit_at(i_)) syntax_error(i_, "expected a blade index");
        long idx = 0;
        while (digit_at(i_)) idx = idx * 10 + (text_[i_++] - '0');
        push_index(start, static_cast<int>(idx));
        if (peek_char(i_) == ',') {
          ++i_;
          continue;
        }
        if (peek_char(i_) == ']') {
          ++i_;
          break;
        }
        syntax_error(i_, "expected ',' or ']' in blade index list");
      }
      return;
    }
    while (digit_at(i_)) push_index(start, text_[i_++] - '0');
  }

  void push_index(std::size_t blade_pos, int idx) {
    if (idx < 1 || idx > sig_.n())
      fail(errc::parse_error, "blade index " + std::to_string(idx) + " at position " +
                                  std::to_string(blade_pos + 1) + " must be between 1 and n=" +
                                  std::to_string(sig_.n()));
    if (!tok_.indices.empty() && tok_.indices.back() >= idx)
      fail(errc::parse_error, "blade indices at position " + std::to_string(blade_pos + 1) +
                                  " must be strictly increasing");
    tok_.indices.push_back(idx);
  }

  const std::string& text_;
  const Signature& sig_;
  std::size_t i_ = 0;
  Token tok_;
};

ExprPtr make(Expression e) { return std::make_shared<const Expression>(std::move(e)); }

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig) : lx_(text, sig) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (lx_.peek().kind != Token::Kind::end)
      syntax_error(lx_.peek().pos, "unexpected trailing input");
    return e;
  }

 private:
  bool at_op(char c) const {
    return lx_.peek().kind == Token::Kind::op && lx_.peek().op == c;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (at_op('+') || at_op('-')) {
      const char op = lx_.take().op;
      ExprPtr right = term();
      Expression e;
      e.kind = op == '+' ? Expression::Kind::add : Expression::Kind::sub;
      e.lhs = std::move(left);
      e.rhs = std::move(right);
      left = make(std::move(e));
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (at_op('*') || at_op('/')) {
      const Token op = lx_.take();
      if (op.op == '*') {
        Expression e;
        e.kind = Expression::Kind::mul;
        e.lhs = std::move(left);
        e.rhs = factor();
        left = make(std::move(e));
      } else {
        const Token lit = lx_.peek();
        if (lit.kind != Token::Kind::number)
          syntax_error(lit.pos, "division is only defined by scalar literals");
        lx_.take();
        if (literal_is_zero(lit)) syntax_error(lit.pos, "division by zero literal");
        Expression num;
        num.kind = Expression::Kind::number;
        num.lexeme = lit.lexeme;
        num.imaginary = lit.imaginary;
        Expression e;
        e.kind = Expression::Kind::div_literal;
        e.lhs = std::move(left);
        e.rhs = make(std::move(num));
        left = make(std::move(e));
      }
    }
    return left;
  }

  static bool literal_is_zero(const Token& t) {
    for (char c : t.lexeme)
      if (c >= '1' && c <= '9') return false;
    return true;
  }

  ExprPtr factor() {
    if (at_op('-')) {
      lx_.take();
      Expression e;
      e.kind = Expression::Kind::neg;
      e.lhs = factor();
      return make(std::move(e));
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr base = primary();
    while (lx_.peek().kind == Token::Kind::op) {
      Conjugation c;
      switch (lx_.peek().op) {
        case '\'': c = Conjugation::reversion; break;
        case '^': c = Conjugation::grade_involution; break;
        case '!': c = Conjugation::hermitian; break;
        case '~': c = Conjugation::complex_conj; break;
        case '#': c = Conjugation::triangle; break;
        default: return base;
      }
      lx_.take();
      Expression e;
      e.kind = Expression::Kind::conj;
      e.conj = c;
      e.lhs = std::move(base);
      base = make(std::move(e));
    }
    return base;
  }

  ExprPtr primary() {
    const Token t = lx_.peek();
    switch (t.kind) {
      case Token::Kind::number: {
        lx_.take();
        Expression e;
        e.kind = Expression::Kind::number;
        e.lexeme = t.lexeme;
        e.imaginary = t.imaginary;
        return make(std::move(e));
      }
      case Token::Kind::blade: {
        lx_.take();
        Expression e;
        e.kind = Expression::Kind::blade;
        e.indices = t.indices;
        return make(std::move(e));
      }
      case Token::Kind::op:
        if (t.op == '(') {
          lx_.take();
          ExprPtr inner = expr();
          if (!at_op(')')) syntax_error(lx_.peek().pos, "expected ')'");
          lx_.take();
          return inner;
        }
        syntax_error(t.pos, "expected a value");
      default:
        syntax_error(t.pos, "unexpected end of input");
    }
  }

  Lexer lx_;
};

template <class S>
S literal_value(const std::string& lexeme, bool imaginary);

std::uint32_t mask_of(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  for (int idx : indices) mask |= std::uint32_t{1} << (idx - 1);
  return mask;
}

template <class S>
Multivector<S> eval(const ExprPtr& e, const Signature& sig) {
  using traits = scalar_traits<S>;
  switch (e->kind) {
    case Expression::Kind::number: {
      S v = literal_value<S>(e->lexeme, e->imaginary);
      return Multivector<S>::scalar(sig, std::move(v));
    }
    case Expression::Kind::blade:
      return Multivector<S>::basis_blade(sig, mask_of(e->indices));
    case Expression::Kind::add:
      return eval<S>(e->lhs, sig) + eval<S>(e->rhs, sig);
    case Expression::Kind::sub:
      return eval<S>(e->lhs, sig) - eval<S>(e->rhs, sig);
    case Expression::Kind::mul:
      return eval<S>(e->lhs, sig) * eval<S>(e->rhs, sig);
    case Expression::Kind::div_literal: {
      S lit = literal_value<S>(e->rhs->lexeme, e->rhs->imaginary);
      return eval<S>(e->lhs, sig).scaled(traits::inverted(lit));
    }
    case Expression::Kind::neg:
      return -eval<S>(e->lhs, sig);
    case Expression::Kind::conj: {
      Multivector<S> x = eval<S>(e->lhs, sig);
      switch (e->conj) {
        case Conjugation::reversion: return x.reversion();
        case Conjugation::grade_involution: return x.grade_involution();
        case Conjugation::hermitian: return x.hermitian_conjugation();
        case Conjugation::complex_conj: return x.complex_conjugation();
        default: return x.triangle_conjugation();
      }
    }
  }
  fail(errc::internal, "unreachable expression kind");
}

template <>
FloatComplex literal_value<FloatComplex>(const std::string& lexeme, bool imaginary) {
  const double v = std::strtod(lexeme.c_str(), nullptr);
  return imaginary ? FloatComplex{0.0, v} : FloatComplex{v, 0.0};
}

template <>
GaussianRational literal_value<GaussianRational>(const std::string& lexeme, bool imaginary) {
  Rational v = rational_from_decimal(lexeme);
  return imaginary ? GaussianRational{Rational(0), std::move(v)}
                   : GaussianRational{std::move(v), Rational(0)};
}

}  // namespace

ExprPtr parse_expression(const std::string& text, const Signature& sig) {
  if (text.empty() ||
      text.find_first_not_of(" \t\r\n") == std::string::npos)
    fail(errc::parse_error, "empty expression");
  return Parser(text, sig).run();
}

bool expressions_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expression::Kind::number:
      return a->lexeme == b->lexeme && a->imaginary == b->imaginary;
    case Expression::Kind::blade:
      return a->indices == b->indices;
    case Expression::Kind::neg:
      return expressions_equal(a->lhs, b->lhs);
    case Expression::Kind::conj:
      return a->conj == b->conj && expressions_equal(a->lhs, b->lhs);
    default:
      return expressions_equal(a->lhs, b->lhs) && expressions_equal(a->rhs, b->rhs);
  }
}

namespace {

int precedence(Expression::Kind k) {
  switch (k) {
    case Expression::Kind::add:
    case Expression::Kind::sub: return 1;
    case Expression::Kind::mul:
    case Expression::Kind::div_literal: return 2;
    case Expression::Kind::neg: return 3;
    default: return 4;  // literals, blades, postfix chains
  }
}

char conj_char(Conjugation c) {
  switch (c) {
    case Conjugation::reversion: return '\'';
    case Conjugation::grade_involution: return '^';
    case Conjugation::hermitian: return '!';
    case Conjugation::complex_conj: return '~';
    default: return '#';
  }
}

void print(const ExprPtr& e, std::string& out, int parent_prec) {
  const int prec = precedence(e->kind);
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (e->kind) {
    case Expression::Kind::number:
      out += e->lexeme;
      if (e->imaginary) out += 'i';
      break;
    case Expression::Kind::blade: {
      out += 'e';
      bool bracket = false;
      for (int idx : e->indices)
        if (idx > 9) bracket = true;
      if (bracket) {
        out += '[';
        for (std::size_t i = 0; i < e->indices.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(e->indices[i]);
        }
        out += ']';
      } else {
        for (int idx : e->indices) out += char('0' + idx);
      }
      break;
    }
    case Expression::Kind::add:
      print(e->lhs, out, prec);
      out += " + ";
      print(e->rhs, out, prec + 1);
      break;
    case Expression::Kind::sub:
      print(e->lhs, out, prec);
      out += " - ";
      print(e->rhs, out, prec + 1);
      break;
    case Expression::Kind::mul:
      print(e->lhs, out, prec);
      out += '*';
      print(e->rhs, out, prec + 1);
      break;
    case Expression::Kind::div_literal:
      print(e->lhs, out, prec);
      out += '/';
      out += e->rhs->lexeme;
      if (e->rhs->imaginary) out += 'i';
      break;
    case Expression::Kind::neg:
      out += '-';
      print(e->lhs, out, prec + 1);
      break;
    case Expression::Kind::conj:
      print(e->lhs, out, 4);
      out += conj_char(e->conj);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string expression_to_string(const ExprPtr& expr) {
  std::string out;
  print(expr, out, 0);
  return out;
}

MvFloat evaluate_float(const ExprPtr& expr, const Signature& sig) {
  return eval<FloatComplex>(expr, sig);
}
MvExact evaluate_exact(const ExprPtr& expr, const Signature& sig) {
  return eval<GaussianRational>(expr, sig);
}
AnyMultivector evaluate(const ExprPtr& expr, const Signature& sig, Mode mode) {
  if (mode == Mode::exact) return AnyMultivector(evaluate_exact(expr, sig));
  return AnyMultivector(evaluate_float(expr, sig));
}

namespace {

std::string format_double(double v, int digits) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string blade_symbol(std::uint32_t mask, int n) {
  if (mask == 0) return "e";
  std::string out = "e";
  if (n > 9) {
    out += '[';
    bool first = true;
    for (int a = 1; a <= n; ++a)
      if (mask & (std::uint32_t{1} << (a - 1))) {
        if (!first) out += ',';
        out += std::to_string(a);
        first = false;
      }
    out += ']';
  } else {
    for (int a = 1; a <= n; ++a)
      if (mask & (std::uint32_t{1} << (a - 1))) out += char('0' + a);
  }
  return out;
}

// one term as (leading_minus, body) so the join can use " - "
struct PrintedTerm {
  bool negative = false;
  std::string body;
};

PrintedTerm print_term_float(std::uint32_t mask, FloatComplex c, int n, int digits) {
  PrintedTerm out;
  const bool has_re = c.real() != 0.0;
  const bool has_im = c.imag() != 0.0;
  std::string coef;
  bool coef_is_one = false;
  if (has_re && has_im) {
    std::string re = format_double(c.real(), digits);
    std::string im = format_double(c.imag(), digits);
    coef = "(" + re + (im[0] == '-' ? " - " + im.substr(1) : " + " + im) + "i)";
  } else if (has_im) {
    double v = c.imag();
    out.negative = v < 0;
    coef = format_double(out.negative ? -v : v, digits) + "i";
  } else {
    double v = has_re ? c.real() : 0.0;
    out.negative = v < 0;
    coef = format_double(out.negative ? -v : v, digits);
    coef_is_one = coef == "1";
  }
  if (mask == 0)
    out.body = coef;
  else if (coef_is_one)
    out.body = blade_symbol(mask, n);
  else
    out.body = coef + "*" + blade_symbol(mask, n);
  return out;
}

std::string rational_term_text(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

PrintedTerm print_term_exact(std::uint32_t mask, const GaussianRational& c, int n) {
  PrintedTerm out;
  const bool has_re = sgn(c.re) != 0;
  const bool has_im = sgn(c.im) != 0;
  std::string coef;
  bool coef_is_one = false;
  if (has_re && has_im) {
    std::string re = rational_term_text(c.re);
    std::string im = rational_term_text(c.im);
    bool im_neg = im[0] == '-';
    coef = "(" + re + (im_neg ? " - " + im.substr(1) : " + " + im) + "*i)";
  } else if (has_im) {
    out.negative = sgn(c.im) < 0;
    coef = rational_term_text(out.negative ? Rational(-c.im) : c.im) + "*i";
  } else {
    out.negative = sgn(c.re) < 0;
    coef = rational_term_text(out.negative ? Rational(-c.re) : c.re);
    coef_is_one = coef == "1";
  }
  if (mask == 0)
    out.body = coef;
  else if (coef_is_one)
    out.body = blade_symbol(mask, n);
  else
    out.body = coef + "*" + blade_symbol(mask, n);
  return out;
}

template <class S, class TermPrinter>
std::string mv_text(const Multivector<S>& m, TermPrinter printer) {
  if (m.is_zero()) return "0";
  // grade-major display order
  std::vector<std::pair<std::uint32_t, S>> terms(m.terms().begin(), m.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return blade_grade(a.first) < blade_grade(b.first);
  });
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    PrintedTerm pt = printer(t.first, t.second);
    if (first) {
      if (pt.negative) out += '-';
      out += pt.body;
      first = false;
    } else {
      out += pt.negative ? " - " : " + ";
      out += pt.body;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const MvFloat& m, int significant_digits) {
  const int n = m.signature().n();
  return mv_text(m, [&](std::uint32_t mask, const FloatComplex& c) {
    return print_term_float(mask, c, n, significant_digits);
  });
}

std::string to_text(const MvExact& m) {
  const int n = m.signature().n();
  return mv_text(m, [&](std::uint32_t mask, const GaussianRational& c) {
    return print_term_exact(mask, c, n);
  });
}

std::string to_text(const AnyMultivector& m, int significant_digits) {
  if (m.mode() == Mode::exact) return to_text(m.as_exact());
  return to_text(m.as_float(), significant_digits);
}

}  // namespace garank
