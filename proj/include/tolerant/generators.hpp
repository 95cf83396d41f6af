#pragma once

// Seeded random inputs with known factorizations, shared by the selfcheck
// harness and the test suites.

#include <cstdint>
#include <optional>
#include <random>

#include "tolerant/factor.hpp"

namespace tolerant {

struct GeneratedCase {
  Factorization factorization;
  Polynomial polynomial;              // factorization.expand()
  std::optional<RootMultiset> roots;  // set when every factor is linear
};

struct GeneratorOptions {
  unsigned max_degree = 8;
  unsigned max_multiplicity = 3;
  bool monic = false;
};

// Q: products of (x - r) with distinct small rational roots.
// F_p: products of distinct random monic irreducibles of degree <= 4.
// F_p(t): products of x - b (b in F_p) and Eisenstein polynomials
//   x^k - (t + a) with k in {1, 2, p, 2p}, which are irreducible and pairwise
//   coprime for distinct (k, a); this covers inseparable factors.
class CaseGenerator {
 public:
  CaseGenerator(FieldDescriptor field, std::uint64_t seed, GeneratorOptions options = {});

  GeneratedCase next();

  FieldElement random_element();
  FieldElement random_nonzero();
  // Dense random polynomial of exactly the given degree.
  Polynomial random_polynomial(unsigned degree);
  unsigned uniform(unsigned lo, unsigned hi);

 private:
  Factor random_factor(unsigned max_degree);

  FieldDescriptor field_;
  GeneratorOptions options_;
  std::mt19937_64 rng_;
};

}  // namespace tolerant
