#include "tolerant/generators.hpp"

#include <algorithm>

namespace tolerant {

CaseGenerator::CaseGenerator(FieldDescriptor field, std::uint64_t seed, GeneratorOptions options)
    : field_(field), options_(options), rng_(seed) {}

unsigned CaseGenerator::uniform(unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng_);
}

FieldElement CaseGenerator::random_element() {
  switch (field_.kind()) {
    case FieldKind::kRationals: {
      const long num = static_cast<long>(uniform(0, 18)) - 9;
      return FieldElement::from_fraction(field_, num, uniform(1, 5));
    }
    case FieldKind::kPrimeField:
      return FieldElement::from_integer(field_, static_cast<long>(uniform(0, field_.characteristic() - 1)));
    case FieldKind::kRationalFunctionField: {
      const std::uint32_t p = field_.characteristic();
      std::vector<std::uint32_t> num(uniform(1, 3));
      for (auto& c : num) c = uniform(0, p - 1);
      std::vector<std::uint32_t> den(uniform(1, 2));
      for (auto& c : den) c = uniform(0, p - 1);
      den.back() = 1;
      return FieldElement::from_rational_function(field_, ModPoly(p, num), ModPoly(p, den));
    }
  }
  return FieldElement::zero(field_);
}

FieldElement CaseGenerator::random_nonzero() {
  for (;;) {
    FieldElement a = random_element();
    if (!a.is_zero()) return a;
  }
}

Polynomial CaseGenerator::random_polynomial(unsigned degree) {
  std::vector<FieldElement> c;
  for (unsigned i = 0; i < degree; ++i) c.push_back(random_element());
  c.push_back(random_nonzero());
  return Polynomial(field_, std::move(c));
}

Factor CaseGenerator::random_factor(unsigned max_degree) {
  const FieldElement one = FieldElement::one(field_);
  switch (field_.kind()) {
    case FieldKind::kRationals: {
      const long num = static_cast<long>(uniform(0, 12)) - 6;
      return {Polynomial::linear(FieldElement::from_fraction(field_, num, uniform(1, 3))), 1};
    }
    case FieldKind::kPrimeField: {
      const unsigned d = uniform(1, std::min(4u, max_degree));
      for (;;) {
        std::vector<FieldElement> c;
        for (unsigned i = 0; i < d; ++i) c.push_back(random_element());
        c.push_back(one);
        Polynomial g(field_, std::move(c));
        if (is_irreducible_prime_field(g)) return {std::move(g), 1};
      }
    }
    case FieldKind::kRationalFunctionField: {
      const unsigned p = field_.characteristic();
      std::vector<unsigned> shapes{1, 2, p, 2 * p};
      std::sort(shapes.begin(), shapes.end());
      shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
      std::erase_if(shapes, [&](unsigned k) { return k > max_degree; });
      const unsigned pick = uniform(0, static_cast<unsigned>(shapes.size()));
      if (pick == shapes.size()) {
        const FieldElement b = FieldElement::from_integer(field_, static_cast<long>(uniform(0, p - 1)));
        return {Polynomial::linear(b), 1};
      }
      const FieldElement shift =
          FieldElement::indeterminate(field_) + FieldElement::from_integer(field_, static_cast<long>(uniform(0, p - 1)));
      return {Polynomial::monomial(one, shapes[pick]) - Polynomial::constant(shift), 1};
    }
  }
  return {Polynomial::x(field_), 1};
}

GeneratedCase CaseGenerator::next() {
  const unsigned cap = std::max(1u, options_.max_degree);
  unsigned remaining = uniform(std::min(2u, cap), cap);
  std::vector<Factor> factors;
  for (int attempts = 0; remaining > 0 && attempts < 64; ++attempts) {
    Factor f = random_factor(remaining);
    const bool shapes_coprime = field_.kind() == FieldKind::kRationalFunctionField;
    const bool clash = std::any_of(factors.begin(), factors.end(), [&](const Factor& h) {
      return shapes_coprime ? h.poly == f.poly : gcd(h.poly, f.poly).degree() > 0;
    });
    if (clash) continue;
    const auto d = static_cast<unsigned>(f.poly.degree());
    f.multiplicity = uniform(1, std::max(1u, std::min(options_.max_multiplicity, remaining / d)));
    remaining -= f.multiplicity * d;
    factors.push_back(std::move(f));
  }
  Factorization fac{options_.monic ? FieldElement::one(field_) : random_nonzero(), std::move(factors)};
  GeneratedCase out{fac, fac.expand(), std::nullopt};
  if (std::all_of(fac.factors.begin(), fac.factors.end(), [](const Factor& f) { return f.poly.degree() == 1; })) {
    RootMultiset roots{{}, fac.unit};
    for (const auto& [g, m] : fac.factors) roots.entries.push_back({-g.constant_term(), m});
    out.roots = std::move(roots);
  }
  return out;
}

}  // namespace tolerant
