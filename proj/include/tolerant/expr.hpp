#pragma once

// Polynomial expression language used by the command line:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'x' | 't' | '(' expr ')'
//
// Division is only allowed by nonzero constants (rationals "a/b", inverses
// mod p, rational functions in t). 't' is the indeterminate of F_p(t).

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tolerant/factor.hpp"

namespace tolerant {

struct ExprNode {
  enum class Kind { kNumber, kX, kT, kAdd, kSub, kMul, kDiv, kPow, kNeg };

  Kind kind;
  std::size_t position = 0;  // byte offset of the token that produced the node
  mpz_class number;          // kNumber
  unsigned exponent = 0;     // kPow
  std::vector<ExprNode> children;
};

struct PolyExpression {
  std::string source;
  ExprNode root;
  FieldDescriptor field;
};

// Syntax only; SYNTAX_ERROR carries the offending byte offset.
PolyExpression parse_expression(std::string_view text, const FieldDescriptor& field);

// FIELD_LITERAL_ERROR (with offset) for 't' outside F_p(t), division by a
// non-constant, or a denominator that vanishes in the field.
Polynomial evaluate(const PolyExpression& expr);
// Reads `unit * (g1)^m1 * (g2)^m2 * ...`: constants fold into the unit, each
// nonconstant multiplicand becomes a monic factor, equal factors merge, and
// the result is validated (INVALID_FACTORIZATION on shared roots).
Factorization evaluate_factored(const PolyExpression& expr);

Polynomial parse_polynomial(std::string_view text, const FieldDescriptor& field);
Factorization parse_factored(std::string_view text, const FieldDescriptor& field);
std::variant<Polynomial, Factorization> parse_polynomial(std::string_view text, const FieldDescriptor& field,
                                                         bool factored);

// "unit * (g1)^m1 * ..." in a form parse_factored reads back.
std::string to_string(const Factorization& fac);

}  // namespace tolerant
