#include "tolerant/poly.hpp"

#include <algorithm>
#include <numeric>

namespace tolerant {

Polynomial::Polynomial(FieldDescriptor field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field());
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t k) {
  std::vector<FieldElement> coeffs(k + 1, FieldElement::zero(c.field()));
  coeffs[k] = c;
  return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::linear(const FieldElement& root) {
  return Polynomial(root.field(), {-root, FieldElement::one(root.field())});
}

FieldElement Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElement::zero(field_);
}

const FieldElement& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_field(f.field_, g.field_);
  const auto& longer = f.coeffs_.size() >= g.coeffs_.size() ? f : g;
  const auto& shorter = f.coeffs_.size() >= g.coeffs_.size() ? g : f;
  Polynomial r = longer;
  for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i) r.coeffs_[i] += shorter.coeffs_[i];
  r.normalize();
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_field(f.field_, g.field_);
  Polynomial r(f.field_);
  if (f.is_zero() || g.is_zero()) return r;
  r.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, FieldElement::zero(f.field_));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  require_same_field(field_, c.field());
  Polynomial r = *this;
  for (auto& a : r.coeffs_) a *= c;
  r.normalize();
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(FieldElement::one(field_));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

FieldElement Polynomial::evaluate(const FieldElement& a) const {
  require_same_field(field_, a.field());
  FieldElement acc = FieldElement::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial r(field_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    r.coeffs_.push_back(coeffs_[i] * FieldElement::from_integer(field_, static_cast<long>(i)));
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::inflate(unsigned k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<FieldElement> out(static_cast<std::size_t>(degree()) * k + 1, FieldElement::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  require_same_field(f.field(), g.field());
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  const FieldDescriptor& field = f.field();
  if (f.degree() < g.degree()) return {Polynomial(field), f};
  std::vector<FieldElement> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<FieldElement> quot(rem.size() - g.coeffs().size() + 1, FieldElement::zero(field));
  const FieldElement inv = g.leading().inverse();
  const int dg = g.degree();
  for (int k = f.degree() - dg; k >= 0; --k) {
    const FieldElement& top = rem[k + dg];
    if (top.is_zero()) continue;
    FieldElement q = top * inv;
    for (int j = 0; j <= dg; ++j) {
      const FieldElement& gj = g.coeffs()[j];
      if (!gj.is_zero()) rem[k + j] -= q * gj;
    }
    quot[k] = std::move(q);
  }
  rem.erase(rem.begin() + dg, rem.end());
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inexact polynomial division");
  return q;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial RootMultiset::expand() const {
  Polynomial f = Polynomial::constant(leading);
  for (const auto& [root, m] : entries) f *= Polynomial::linear(root).pow(m);
  return f;
}

Polynomial hasse_derivative(const Polynomial& f, unsigned r) {
  const FieldDescriptor& field = f.field();
  if (f.degree() < static_cast<int>(r)) return Polynomial(field);
  std::vector<FieldElement> out;
  out.reserve(f.coeffs().size() - r);
  mpz_class binom;
  for (std::size_t n = r; n < f.coeffs().size(); ++n) {
    mpz_bin_uiui(binom.get_mpz_t(), n, r);
    out.push_back(f.coeffs()[n] * FieldElement::from_integer(field, binom));
  }
  return Polynomial(field, std::move(out));
}

Polynomial taylor_shift(const Polynomial& f, const FieldElement& alpha) {
  require_same_field(f.field(), alpha.field());
  const Polynomial step = Polynomial(f.field(), {alpha, FieldElement::one(f.field())});
  Polynomial acc(f.field());
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * step + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial homothety(const Polynomial& f, const FieldElement& alpha) {
  require_same_field(f.field(), alpha.field());
  if (alpha.is_zero()) throw Error(ErrorCode::kZeroScale, "homothety by zero");
  std::vector<FieldElement> out;
  out.reserve(f.coeffs().size());
  FieldElement power = FieldElement::one(f.field());
  for (const auto& c : f.coeffs()) {
    out.push_back(c * power);
    power *= alpha;
  }
  return Polynomial(f.field(), std::move(out));
}

Polynomial reciprocal(const Polynomial& f) {
  if (f.is_zero() || f.constant_term().is_zero()) {
    throw Error(ErrorCode::kZeroConstantTerm, "reciprocal needs a nonzero constant term");
  }
  std::vector<FieldElement> out(f.coeffs().rbegin(), f.coeffs().rend());
  return Polynomial(f.field(), std::move(out));
}

bool is_separable(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::kConstantInput, "separability needs a nonconstant polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

SeparableForm desubstitute(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::kConstantInput, "desubstitution needs a nonconstant polynomial");
  const std::uint32_t p = f.field().characteristic();
  if (p == 0) return {f, 0};
  // gcd of the exponents carrying nonzero coefficients.
  std::size_t g = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (!f.coeffs()[i].is_zero()) g = std::gcd(g, i);
  }
  unsigned e = 0;
  std::size_t step = 1;
  while (g % (step * p) == 0) {
    step *= p;
    ++e;
  }
  if (e == 0) return {f, 0};
  std::vector<FieldElement> out;
  out.reserve(f.coeffs().size() / step + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); i += step) out.push_back(f.coeffs()[i]);
  return {Polynomial(f.field(), std::move(out)), e};
}

Polynomial frobenius_twist(const Polynomial& g, unsigned a) {
  if (a == 0) return g;
  std::vector<FieldElement> out;
  out.reserve(g.coeffs().size());
  for (const auto& c : g.coeffs()) out.push_back(c.frobenius_power(a));
  return Polynomial(g.field(), std::move(out));
}

std::string to_string(const Polynomial& f, char var) {
  if (f.is_zero()) return "0";
  const bool rationals = f.field().kind() == FieldKind::kRationals;
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const FieldElement& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    std::string magnitude;
    bool negative = false;
    if (rationals) {
      negative = c.rational() < 0;
      magnitude = mpq_class(abs(c.rational())).get_str();
    } else {
      magnitude = c.to_string();
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += magnitude;
      continue;
    }
    if (magnitude != "1") {
      out += magnitude.find(' ') == std::string::npos ? magnitude : "(" + magnitude + ")";
      out += "*";
    }
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace tolerant
