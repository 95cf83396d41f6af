#include "tolerant/expr.hpp"

#include <cctype>

namespace tolerant {

namespace {

constexpr unsigned kMaxExponent = 10000;
constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprNode parse() {
    ExprNode root = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] static void fail_at(std::size_t pos, const std::string& what) {
    throw Error(ErrorCode::kSyntaxError, what + " at offset " + std::to_string(pos), pos);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Next operator character with U+2212 folded into '-'; 0 at end of input.
  char peek() {
    skip_space();
    if (pos_ >= text_.size()) return 0;
    if (text_.substr(pos_).starts_with(kUnicodeMinus)) return '-';
    return text_[pos_];
  }

  void advance() { pos_ += text_.substr(pos_).starts_with(kUnicodeMinus) ? kUnicodeMinus.size() : 1; }

  static ExprNode binary(ExprNode::Kind kind, std::size_t pos, ExprNode lhs, ExprNode rhs) {
    ExprNode node{kind, pos, {}, 0, {}};
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExprNode expr() {
    ExprNode lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const std::size_t at = pos_;
      advance();
      lhs = binary(c == '+' ? ExprNode::Kind::kAdd : ExprNode::Kind::kSub, at, std::move(lhs), term());
    }
    return lhs;
  }

  ExprNode term() {
    ExprNode lhs = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      const std::size_t at = pos_;
      advance();
      lhs = binary(c == '*' ? ExprNode::Kind::kMul : ExprNode::Kind::kDiv, at, std::move(lhs), unary());
    }
    return lhs;
  }

  ExprNode unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      const std::size_t at = pos_;
      advance();
      ExprNode operand = unary();
      if (c == '+') return operand;
      ExprNode node{ExprNode::Kind::kNeg, at, {}, 0, {}};
      node.children.push_back(std::move(operand));
      return node;
    }
    return power();
  }

  ExprNode power() {
    ExprNode base = primary();
    if (peek() != '^') return base;
    const std::size_t at = pos_;
    advance();
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail_at(start, "expected a nonnegative integer exponent");
    const mpz_class value(std::string(text_.substr(start, pos_ - start)));
    if (value > kMaxExponent) fail_at(start, "exponent exceeds " + std::to_string(kMaxExponent));
    ExprNode node{ExprNode::Kind::kPow, at, {}, static_cast<unsigned>(value.get_ui()), {}};
    node.children.push_back(std::move(base));
    if (peek() == '^') fail("chained exponents need parentheses");
    return node;
  }

  ExprNode primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == 0) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ExprNode{ExprNode::Kind::kNumber, at, mpz_class(std::string(text_.substr(at, pos_ - at))), 0, {}};
    }
    if (c == 'x' || c == 't') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) fail_at(at, "unknown symbol");
      return ExprNode{c == 'x' ? ExprNode::Kind::kX : ExprNode::Kind::kT, at, {}, 0, {}};
    }
    if (c == '(') {
      ++pos_;
      ExprNode inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown symbol");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void literal_error(std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::kFieldLiteralError, what + " at offset " + std::to_string(pos), pos);
}

Polynomial eval_node(const ExprNode& node, const FieldDescriptor& field) {
  using Kind = ExprNode::Kind;
  switch (node.kind) {
    case Kind::kNumber: return Polynomial::constant(FieldElement::from_integer(field, node.number));
    case Kind::kX: return Polynomial::x(field);
    case Kind::kT:
      if (field.kind() != FieldKind::kRationalFunctionField) {
        literal_error(node.position, "'t' is not an element of " + field.to_string());
      }
      return Polynomial::constant(FieldElement::indeterminate(field));
    case Kind::kAdd: return eval_node(node.children[0], field) + eval_node(node.children[1], field);
    case Kind::kSub: return eval_node(node.children[0], field) - eval_node(node.children[1], field);
    case Kind::kMul: return eval_node(node.children[0], field) * eval_node(node.children[1], field);
    case Kind::kNeg: return -eval_node(node.children[0], field);
    case Kind::kPow: return eval_node(node.children[0], field).pow(node.exponent);
    case Kind::kDiv: {
      const Polynomial divisor = eval_node(node.children[1], field);
      if (divisor.degree() > 0) literal_error(node.position, "division by a polynomial in x");
      if (divisor.is_zero()) literal_error(node.position, "denominator vanishes in " + field.to_string());
      return eval_node(node.children[0], field).scaled(divisor.leading().inverse());
    }
  }
  return Polynomial(field);
}

// Splits a top-level product into multiplicands, folding signs and constant
// divisors into `unit`.
void flatten_product(const ExprNode& node, const FieldDescriptor& field, FieldElement& unit,
                     std::vector<const ExprNode*>& out) {
  using Kind = ExprNode::Kind;
  switch (node.kind) {
    case Kind::kNeg:
      unit = -unit;
      flatten_product(node.children[0], field, unit, out);
      return;
    case Kind::kMul:
      flatten_product(node.children[0], field, unit, out);
      flatten_product(node.children[1], field, unit, out);
      return;
    case Kind::kDiv: {
      const Polynomial divisor = eval_node(node.children[1], field);
      if (divisor.degree() > 0) literal_error(node.position, "division by a polynomial in x");
      if (divisor.is_zero()) literal_error(node.position, "denominator vanishes in " + field.to_string());
      unit /= divisor.leading();
      flatten_product(node.children[0], field, unit, out);
      return;
    }
    default: out.push_back(&node);
  }
}

}  // namespace

PolyExpression parse_expression(std::string_view text, const FieldDescriptor& field) {
  return PolyExpression{std::string(text), Parser(text).parse(), field};
}

Polynomial evaluate(const PolyExpression& expr) { return eval_node(expr.root, expr.field); }

Factorization evaluate_factored(const PolyExpression& expr) {
  const FieldDescriptor& field = expr.field;
  FieldElement unit = FieldElement::one(field);
  std::vector<const ExprNode*> multiplicands;
  flatten_product(expr.root, field, unit, multiplicands);

  std::vector<Factor> factors;
  for (const ExprNode* node : multiplicands) {
    const bool powered = node->kind == ExprNode::Kind::kPow;
    const unsigned m = powered ? node->exponent : 1;
    const Polynomial base = eval_node(powered ? node->children[0] : *node, field);
    if (base.is_zero()) throw Error(ErrorCode::kInvalidFactorization, "factored input is zero");
    if (base.degree() == 0) {
      unit *= base.leading().pow(static_cast<long>(m));
      continue;
    }
    if (m == 0) continue;
    unit *= base.leading().pow(static_cast<long>(m));
    Polynomial g = base.monic();
    bool merged = false;
    for (auto& f : factors) {
      if (f.poly == g) {
        f.multiplicity += m;
        merged = true;
        break;
      }
    }
    if (!merged) factors.push_back({std::move(g), m});
  }
  Factorization fac{unit, std::move(factors)};
  fac.validate();
  return fac;
}

Polynomial parse_polynomial(std::string_view text, const FieldDescriptor& field) {
  return evaluate(parse_expression(text, field));
}

Factorization parse_factored(std::string_view text, const FieldDescriptor& field) {
  return evaluate_factored(parse_expression(text, field));
}

std::variant<Polynomial, Factorization> parse_polynomial(std::string_view text, const FieldDescriptor& field,
                                                         bool factored) {
  if (factored) return parse_factored(text, field);
  return parse_polynomial(text, field);
}

std::string to_string(const Factorization& fac) {
  std::string out;
  const std::string unit = fac.unit.to_string();
  if (!fac.unit.is_one() || fac.factors.empty()) {
    out = unit.find_first_of(" /-") == std::string::npos ? unit : "(" + unit + ")";
  }
  for (const auto& [g, m] : fac.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + to_string(g) + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace tolerant
