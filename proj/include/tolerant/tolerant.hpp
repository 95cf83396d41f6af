#pragma once

// The tolerant, duplicant and generalized discriminant, computed three ways:
// from coefficients through a u-parametrized resultant, from a factorization,
// and (when all roots are rational) straight from the roots.
//
// Conventions shared by every path: tol(c) = 1 for a nonzero constant c and
// tol(f) = 1 for linear f; the zero polynomial is rejected with ZERO_POLYNOMIAL.

#include <cstdint>

#include "tolerant/factor.hpp"
#include "tolerant/poly.hpp"
#include "tolerant/resultant.hpp"

namespace tolerant {

// G = sum_{i=1}^{deg f} u^{i-1} D^i f.
UPolynomial hasse_series(const Polynomial& f);

// res_x(f, G) together with the data the tolerant needs from it.
struct GeneralizedResultant {
  Polynomial resultant;      // polynomial in u
  unsigned trailing_order;   // ord_u of the resultant = sum_i m_i (m_i - 1)
  FieldElement trailing;     // tc_u of the resultant
  int series_x_degree;       // exact x-degree of G
};

// deg f >= 1.
GeneralizedResultant generalized_resultant(const Polynomial& f);

// lc(f)^{-1} * tc_u(res_x(f, G)). DEGREE_TOO_SMALL below degree 2.
FieldElement gdisc(const Polynomial& f);

// Coefficient-only tolerant: with k = ord_u res_x(f, G) and d = deg_x G,
//   tol(f) = (-1)^{binom(n,2) - k/2} * lc^{n-1-d} * gdisc(f).
// The sign reduces to (-1)^{binom(n,2)} for separable f; the lc power is 1
// unless p divides n.
FieldElement tol(const Polynomial& f);

// lc(f)^2 * tol(f).
FieldElement dupl(const Polynomial& f);

// lc^{2n-2} prod_{i<j} (r_i - r_j)^{2 m_i m_j}.
// DUPLICATE_ROOTS, DEGREE_MISMATCH (sum of multiplicities != n).
FieldElement tol_from_roots(const RootMultiset& roots, unsigned n);

// A value whose derivation relied on an irreducibility claim; trusted_input
// is set when that claim could not be verified.
struct TrustedValue {
  FieldElement value;
  bool trusted_input = false;
};

// disc(f_sep)^{p^e} for an irreducible f (scaled by lc^{2n-2} if not monic).
TrustedValue tol_irreducible(const Polynomial& f);

enum class FormulaMode {
  kPaperSeparable,  // separable-factor formula, N = sum m_i
  kPaperGeneral,    // printed general formula, N = sum m_i p^{e_i}; disagrees with the
                    // root definition once some e_i > 0
  kCorrected,       // root-faithful formula with Frobenius-twisted cross resultants
};

std::string_view to_string(FormulaMode mode);
// "paper-separable", "paper-general" or "corrected".
FormulaMode parse_formula_mode(std::string_view text);

// Factors need only be pairwise coprime with separable f_{i,sep}; irreducibility
// is not used by any mode. INVALID_FACTORIZATION, INSEPARABLE_IN_SEPARABLE_MODE,
// ZERO_DISCRIMINANT_FACTOR.
FieldElement tol_from_factorization(const Factorization& fac, FormulaMode mode);

// n^2 - 2n + sum_i m_i^2 over closure multiplicities.
std::uint64_t homothety_exponent(const Polynomial& f);
std::uint64_t homothety_exponent(const Factorization& fac);
// Same exponent read off the resultant: n^2 - n + ord_u res_x(f, G).
std::uint64_t homothety_exponent_from_resultant(const Polynomial& f);

// tol(f) == tol(f*). ZERO_CONSTANT_TERM when f(0) = 0.
bool in_T(const Polynomial& f);

// prod_i f_{i,sep}(0)^{2 m_i (n - m_i p^{e_i})} == (a_0 / a_n)^{2n-2}, the
// root-free form of prod_{i<j} (r_i r_j)^{2 m_i m_j} == (a_0 / a_n)^{2n-2}.
bool inversion_criterion(const Factorization& fac);

}  // namespace tolerant
