#pragma once

// Squarefree decomposition, factorization over F_p, and the Factorization
// container used by the formula paths.

#include <cstdint>
#include <vector>

#include "tolerant/poly.hpp"

namespace tolerant {

struct Factor {
  Polynomial poly;  // monic, degree >= 1
  unsigned multiplicity = 1;
};

// unit * prod poly^multiplicity.
struct Factorization {
  FieldElement unit;
  std::vector<Factor> factors;

  const FieldDescriptor& field() const { return unit.field(); }
  // sum multiplicity * deg.
  unsigned degree() const;
  Polynomial expand() const;
  // Throws INVALID_FACTORIZATION unless the unit is nonzero, every factor is
  // monic of degree >= 1 with multiplicity >= 1, and factors are pairwise coprime.
  void validate() const;
};

// Output of the squarefree decomposition. Over F_p(t), a factor whose
// derivative vanishes and whose coefficients are not p-th powers cannot be
// split further; it is returned as `residual` (1 when the decomposition is complete).
struct SquarefreeParts {
  Factorization factorization;
  Polynomial residual;

  bool complete() const { return residual.degree() == 0; }
};

SquarefreeParts squarefree_parts(const Polynomial& f);
// Throws UNSUPPORTED_FIELD when squarefree_parts leaves a residual.
Factorization squarefree_decomposition(const Polynomial& f);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

// Monic irreducible factorization over F_p. Equal-degree splitting draws from
// a generator seeded with `seed`; factors are returned sorted by degree, then
// by coefficients.
Factorization factor_prime_field(const Polynomial& f, std::uint64_t seed = kDefaultSeed);
// gcd(g, x^{p^d} - x) = 1 for every d <= deg(g)/2.
bool is_irreducible_prime_field(const Polynomial& g);
// True when irreducibility of g can be certified cheaply: degree one, any
// degree over F_p, and quadratics over Q. False means "not verified".
bool irreducibility_verified(const Polynomial& g);

// base^exponent mod modulus.
Polynomial pow_mod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus);

// Number of distinct roots in the algebraic closure carrying one multiplicity.
struct MultiplicityClass {
  unsigned multiplicity;
  unsigned root_count;

  bool operator==(const MultiplicityClass&) const = default;
};

// Closure multiplicities, largest first. UNSUPPORTED_FIELD when the
// squarefree decomposition is incomplete over F_p(t); use the Factorization
// overload with a caller-supplied factorization there.
std::vector<MultiplicityClass> multiplicity_profile(const Polynomial& f);
// A factor g = g_sep(x^{p^e}) of multiplicity m contributes deg(g_sep) roots of
// multiplicity m * p^e. INVALID_FACTORIZATION if some g_sep is not separable.
std::vector<MultiplicityClass> multiplicity_profile(const Factorization& fac);

}  // namespace tolerant
