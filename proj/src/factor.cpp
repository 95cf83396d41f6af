#include "tolerant/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace tolerant {

unsigned Factorization::degree() const {
  unsigned n = 0;
  for (const auto& [g, m] : factors) n += m * static_cast<unsigned>(g.degree());
  return n;
}

Polynomial Factorization::expand() const {
  Polynomial f = Polynomial::constant(unit);
  for (const auto& [g, m] : factors) f *= g.pow(m);
  return f;
}

void Factorization::validate() const {
  if (unit.is_zero()) throw Error(ErrorCode::kInvalidFactorization, "factorization unit is zero");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [g, m] = factors[i];
    require_same_field(unit.field(), g.field());
    if (g.degree() < 1 || !g.is_monic()) {
      throw Error(ErrorCode::kInvalidFactorization, "factor " + to_string(g) + " is not monic of degree >= 1");
    }
    if (m == 0) throw Error(ErrorCode::kInvalidFactorization, "factor multiplicity must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (gcd(g, factors[j].poly).degree() > 0) {
        throw Error(ErrorCode::kInvalidFactorization,
                    "factors " + to_string(factors[j].poly) + " and " + to_string(g) + " are not coprime");
      }
    }
  }
}

namespace {

void collect_squarefree(const Polynomial& f, unsigned scale, std::vector<Factor>& out, Polynomial& residual) {
  if (f.degree() < 1) return;
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = exact_div(f, c);
  for (unsigned i = 1; w.degree() > 0; ++i) {
    Polynomial y = gcd(w, c);
    Polynomial z = exact_div(w, y);
    if (z.degree() > 0) out.push_back({std::move(z), i * scale});
    c = exact_div(c, y);
    w = std::move(y);
  }
  if (c.degree() < 1) return;

  // c' = 0 here, so c(x) = h(x^p).
  const std::uint32_t p = f.field().characteristic();
  if (!f.field().is_perfect()) {
    residual *= c.pow(scale);
    return;
  }
  std::vector<FieldElement> root;
  for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k].pth_root());
  collect_squarefree(Polynomial(f.field(), std::move(root)), scale * p, out, residual);
}

bool coefficient_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const auto ra = a.coeffs()[k].residue();
    const auto rb = b.coeffs()[k].residue();
    if (ra != rb) return ra < rb;
  }
  return false;
}

void require_prime_field(const Polynomial& f) {
  if (f.field().kind() != FieldKind::kPrimeField) {
    throw Error(ErrorCode::kUnsupportedField, "factorization is only available over F_p");
  }
}

// Splits a squarefree monic f into (product of its degree-d irreducibles, d).
std::vector<std::pair<Polynomial, unsigned>> distinct_degree(Polynomial f) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  const FieldDescriptor& field = f.field();
  const mpz_class p(field.characteristic());
  const Polynomial x = Polynomial::x(field);
  Polynomial h = divmod(x, f).second;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    h = pow_mod(h, p, f);
    Polynomial g = gcd(h - x, f);
    if (g.degree() > 0) {
      f = exact_div(f, g);
      h = divmod(h, f).second;
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.degree() > 0) {
    const auto d = static_cast<unsigned>(f.degree());
    out.emplace_back(std::move(f), d);
  }
  return out;
}

Polynomial random_below(const FieldDescriptor& field, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> residue(0, field.characteristic() - 1);
  std::vector<FieldElement> c;
  for (int i = 0; i < degree; ++i) c.push_back(FieldElement::from_integer(field, static_cast<long>(residue(rng))));
  return Polynomial(field, std::move(c));
}

// Cantor-Zassenhaus splitting of a product of degree-d irreducibles; the
// trace map replaces the (q-1)/2 power in characteristic 2.
void equal_degree(const Polynomial& f, unsigned d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f);
    return;
  }
  const FieldDescriptor& field = f.field();
  const std::uint32_t p = field.characteristic();
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, d);
  const Polynomial one = Polynomial::constant(FieldElement::one(field));
  for (;;) {
    Polynomial r = random_below(field, f.degree(), rng);
    if (r.degree() < 1) continue;
    Polynomial s(field);
    if (p == 2) {
      Polynomial term = r;
      s = r;
      for (unsigned i = 1; i < d; ++i) {
        term = divmod(term * term, f).second;
        s += term;
      }
    } else {
      s = pow_mod(r, (q - 1) / 2, f) - one;
    }
    Polynomial g = gcd(s, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

std::vector<MultiplicityClass> tally(const std::map<unsigned, unsigned>& counts) {
  std::vector<MultiplicityClass> out;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

}  // namespace

SquarefreeParts squarefree_parts(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::kConstantInput, "squarefree decomposition needs a nonconstant polynomial");
  SquarefreeParts parts{{f.leading(), {}}, Polynomial::constant(FieldElement::one(f.field()))};
  collect_squarefree(f.monic(), 1, parts.factorization.factors, parts.residual);
  std::stable_sort(parts.factorization.factors.begin(), parts.factorization.factors.end(),
                   [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
  return parts;
}

Factorization squarefree_decomposition(const Polynomial& f) {
  SquarefreeParts parts = squarefree_parts(f);
  if (!parts.complete()) {
    throw Error(ErrorCode::kUnsupportedField,
                "inseparable part " + to_string(parts.residual) + " needs p-th roots unavailable in " +
                    f.field().to_string());
  }
  return std::move(parts.factorization);
}

Polynomial pow_mod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus) {
  Polynomial result = divmod(Polynomial::constant(FieldElement::one(base.field())), modulus).second;
  const Polynomial b = divmod(base, modulus).second;
  const std::size_t bits = exponent == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = divmod(result * b, modulus).second;
  }
  return result;
}

Factorization factor_prime_field(const Polynomial& f, std::uint64_t seed) {
  require_prime_field(f);
  Factorization sqf = squarefree_decomposition(f);
  std::mt19937_64 rng(seed);
  Factorization out{sqf.unit, {}};
  for (const auto& [part, m] : sqf.factors) {
    for (auto& [block, d] : distinct_degree(part)) {
      std::vector<Polynomial> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.factors.push_back({std::move(g), m});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return coefficient_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible_prime_field(const Polynomial& g) {
  require_prime_field(g);
  if (g.degree() < 1) return false;
  const Polynomial f = g.monic();
  const mpz_class p(f.field().characteristic());
  const Polynomial x = Polynomial::x(f.field());
  Polynomial h = divmod(x, f).second;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = pow_mod(h, p, f);
    if (gcd(h - x, f).degree() > 0) return false;
  }
  return true;
}

bool irreducibility_verified(const Polynomial& g) {
  if (g.degree() == 1) return true;
  if (g.degree() < 1) return false;
  switch (g.field().kind()) {
    case FieldKind::kPrimeField: return is_irreducible_prime_field(g);
    case FieldKind::kRationals: {
      if (g.degree() != 2) return false;
      const Polynomial m = g.monic();
      const mpq_class b = m.coeff(1).rational();
      const mpq_class c = m.coeff(0).rational();
      const mpq_class disc = b * b - 4 * c;
      if (disc < 0) return true;
      return !(mpz_perfect_square_p(disc.get_num_mpz_t()) && mpz_perfect_square_p(disc.get_den_mpz_t()));
    }
    case FieldKind::kRationalFunctionField: return false;
  }
  return false;
}

std::vector<MultiplicityClass> multiplicity_profile(const Polynomial& f) {
  SquarefreeParts parts = squarefree_parts(f);
  if (!parts.complete()) {
    throw Error(ErrorCode::kUnsupportedField,
                "closure multiplicities of " + to_string(parts.residual) + " need an explicit factorization");
  }
  // Parts produced by the derivative-gcd recursion are separable.
  std::map<unsigned, unsigned> counts;
  for (const auto& [g, m] : parts.factorization.factors) counts[m] += static_cast<unsigned>(g.degree());
  return tally(counts);
}

std::vector<MultiplicityClass> multiplicity_profile(const Factorization& fac) {
  fac.validate();
  const unsigned p = fac.field().char_exponent();
  std::map<unsigned, unsigned> counts;
  for (const auto& [g, m] : fac.factors) {
    const SeparableForm form = desubstitute(g);
    if (form.f_sep.degree() > 0 && !is_separable(form.f_sep)) {
      throw Error(ErrorCode::kInvalidFactorization, "factor " + to_string(g) + " has a repeated root");
    }
    unsigned scale = 1;
    for (unsigned i = 0; i < form.e; ++i) scale *= p;
    counts[m * scale] += static_cast<unsigned>(form.f_sep.degree());
  }
  return tally(counts);
}

}  // namespace tolerant
