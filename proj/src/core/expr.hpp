#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/multivector.hpp"
#include "core/runtime.hpp"

namespace garank {

// Multivector expression AST.
//
// Grammar (postfix binds tightest, then unary minus, then * and the
// scalar-literal division sugar, then + -):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' factor) | ('/' literal))*
//   factor  := '-' factor | postfix
//   postfix := primary conj*          conj: ' reversion, ^ grade involution,
//                                           ! hermitian, ~ complex, # triangle
//   primary := literal | blade | '(' expr ')'
//   literal := number ['i'] | 'i'     number exponents need a signed exponent
//   blade   := 'e' digits | 'e[' idx (',' idx)* ']' | 'e'
struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

enum class Conjugation { reversion, grade_involution, hermitian, complex_conj, triangle };

struct Expression {
  enum class Kind { number, blade, add, sub, mul, div_literal, neg, conj };

  Kind kind;
  // number / the literal side of div_literal
  std::string lexeme;      // numeric text as written, exponent included
  bool imaginary = false;  // literal carries an 'i' suffix (or is bare 'i')
  // blade
  std::vector<int> indices;
  // conj
  Conjugation conj = Conjugation::reversion;
  // children
  ExprPtr lhs;
  ExprPtr rhs;
};

bool expressions_equal(const ExprPtr& a, const ExprPtr& b);

// Parses against a signature (blade indices are validated to 1..n).
// Throws errc::parse_error with a position in the message.
ExprPtr parse_expression(const std::string& text, const Signature& sig);

std::string expression_to_string(const ExprPtr& expr);

MvFloat evaluate_float(const ExprPtr& expr, const Signature& sig);
MvExact evaluate_exact(const ExprPtr& expr, const Signature& sig);
AnyMultivector evaluate(const ExprPtr& expr, const Signature& sig, Mode mode);

// Multivector printers producing expression-grammar text (terms ordered by
// grade then mask). Float coefficients use the given significant digits.
std::string to_text(const MvFloat& m, int significant_digits = 12);
std::string to_text(const MvExact& m);
std::string to_text(const AnyMultivector& m, int significant_digits = 12);

}  // namespace garank
