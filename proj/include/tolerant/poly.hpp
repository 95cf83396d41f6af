#pragma once

// Dense univariate polynomials over one exact field, and the transforms the
// invariant computations are built from.

#include <climits>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tolerant/field.hpp"

namespace tolerant {

class Polynomial {
 public:
  // Degree reported for the zero polynomial. Compares below every real degree.
  static constexpr int kNegInfinity = INT_MIN;

  explicit Polynomial(FieldDescriptor field) : field_(field) {}
  Polynomial(FieldDescriptor field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial monomial(const FieldElement& c, std::size_t k);
  static Polynomial x(const FieldDescriptor& field) { return monomial(FieldElement::one(field), 1); }
  // x - r.
  static Polynomial linear(const FieldElement& root);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept {
    return coeffs_.empty() ? kNegInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  // Coefficient of x^i; zero past the degree.
  FieldElement coeff(std::size_t i) const;
  // Throws ZERO_POLYNOMIAL on the zero polynomial.
  const FieldElement& leading() const;
  FieldElement constant_term() const { return coeff(0); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const FieldElement& c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned k) const;
  FieldElement evaluate(const FieldElement& a) const;
  // Formal derivative.
  Polynomial derivative() const;
  // f(x^k).
  Polynomial inflate(unsigned k) const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) = default;

 private:
  void normalize();

  FieldDescriptor field_;
  std::vector<FieldElement> coeffs_;
};

// f = q*g + r with deg r < deg g.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
// Quotient of a division known to be exact; throws DIVISION_BY_ZERO otherwise.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
// Monic generator of (f, g); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

// f(x) = f_sep(x^{p^e}).
struct SeparableForm {
  Polynomial f_sep;
  unsigned e = 0;
};

// One distinct root with its multiplicity.
struct RootEntry {
  FieldElement root;
  unsigned multiplicity;
};

// lc * prod (x - root)^multiplicity with pairwise distinct roots.
struct RootMultiset {
  std::vector<RootEntry> entries;
  FieldElement leading;

  Polynomial expand() const;
};

// D^r with D^r x^n = binom(n, r) x^{n-r}; binomials are taken over Z and then
// mapped into the field.
Polynomial hasse_derivative(const Polynomial& f, unsigned r);
// f(x + alpha).
Polynomial taylor_shift(const Polynomial& f, const FieldElement& alpha);
// f(alpha * x); ZERO_SCALE for alpha = 0.
Polynomial homothety(const Polynomial& f, const FieldElement& alpha);
// x^deg f * f(1/x); ZERO_CONSTANT_TERM when f(0) = 0.
Polynomial reciprocal(const Polynomial& f);
// gcd(f, f') == 1; CONSTANT_INPUT for deg f < 1.
bool is_separable(const Polynomial& f);
// Largest e with every exponent divisible by p^e. The extracted polynomial
// always has nonzero derivative; it is separable when f is irreducible.
// Reducible inputs get the same total extension.
SeparableForm desubstitute(const Polynomial& f);
// Coefficients replaced by their p^a powers.
Polynomial frobenius_twist(const Polynomial& g, unsigned a);

// Canonical expression text in the variable `var`, e.g. "x^3 - 7*x^2 + 16*x - 12".
// Re-parses to the same polynomial.
std::string to_string(const Polynomial& f, char var = 'x');

}  // namespace tolerant
