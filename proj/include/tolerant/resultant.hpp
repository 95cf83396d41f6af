#pragma once

// Sylvester resultants over a field and over k[u], and the classical
// discriminant.

#include <vector>

#include "tolerant/poly.hpp"

namespace tolerant {

// A polynomial in an auxiliary variable u whose coefficients are polynomials
// in x: sum_i u^i * coeffs[i]. Polynomials in u alone reuse Polynomial.
class UPolynomial {
 public:
  explicit UPolynomial(FieldDescriptor field) : field_(field) {}
  UPolynomial(FieldDescriptor field, std::vector<Polynomial> coeffs);

  const FieldDescriptor& field() const noexcept { return field_; }
  const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Exact degree in x (the largest x-degree among the u-coefficients).
  int x_degree() const;
  // Coefficient of x^j as a polynomial in u.
  Polynomial x_coefficient(std::size_t j) const;
  // Substitutes u = u0, leaving a polynomial in x.
  Polynomial at(const FieldElement& u0) const;

 private:
  FieldDescriptor field_;
  std::vector<Polynomial> coeffs_;
};

// Determinant of the Sylvester matrix built from the exact degrees, so that
// res(f, g) = lc(f)^{deg g} * prod_{f(r)=0} g(r). Constant arguments follow
// res(f, c) = c^{deg f} and res(c, g) = c^{deg g}; ZERO_INPUT for a zero argument.
FieldElement sylvester_resultant(const Polynomial& f, const Polynomial& g);

// res_x(f, G) as a polynomial in u. Over Q and F_p the values at
// u = 0..deg f * deg_u G are computed modulo word-size primes and
// interpolated; Q and small p recombine integer lifts by Chinese remaindering.
// F_p(t) uses fraction-free elimination over k[u].
Polynomial resultant_in_u(const Polynomial& f, const UPolynomial& g);

// res_x(f, G) for G = (f(x + u) - f(x)) / u = sum_{i>=1} u^{i-1} D^i f, with G
// at its exact x-degree. The result is even in u, which halves the samples.
// CONSTANT_INPUT below degree 1.
Polynomial shift_resultant(const Polynomial& f);

// a_n^{2n-2} prod_{i<j} (r_i - r_j)^2, computed from res(f, f'). Zero exactly
// when f has a repeated root in the algebraic closure; 1 in degree one.
FieldElement discriminant(const Polynomial& f);

}  // namespace tolerant
