#include "tolerant/tolerant.hpp"

#include <algorithm>

namespace tolerant {

namespace {

void require_nonzero(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "the zero polynomial has no tolerant");
}

mpz_class ipow(unsigned base, unsigned exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

FieldElement sign_power(const FieldDescriptor& field, const mpz_class& exponent) {
  const FieldElement one = FieldElement::one(field);
  return mpz_odd_p(exponent.get_mpz_t()) ? -one : one;
}

struct PreparedFactor {
  const Factor* factor;
  SeparableForm form;
  FieldElement disc;
  mpz_class inflation;  // p^{e_i}
};

std::vector<PreparedFactor> prepare(const Factorization& fac) {
  fac.validate();
  const unsigned p = fac.field().char_exponent();
  std::vector<PreparedFactor> out;
  out.reserve(fac.factors.size());
  for (const auto& factor : fac.factors) {
    SeparableForm form = desubstitute(factor.poly);
    FieldElement d = discriminant(form.f_sep);
    mpz_class inflation = ipow(p, form.e);
    out.push_back({&factor, std::move(form), std::move(d), std::move(inflation)});
  }
  return out;
}

}  // namespace

UPolynomial hasse_series(const Polynomial& f) {
  std::vector<Polynomial> coeffs;
  for (int i = 1; i <= f.degree(); ++i) coeffs.push_back(hasse_derivative(f, static_cast<unsigned>(i)));
  return UPolynomial(f.field(), std::move(coeffs));
}

GeneralizedResultant generalized_resultant(const Polynomial& f) {
  require_nonzero(f);
  if (f.degree() < 1) throw Error(ErrorCode::kConstantInput, "generalized resultant needs deg f >= 1");
  const UPolynomial series = hasse_series(f);
  Polynomial r = shift_resultant(f);
  // f^{[m]}(r) != 0 at a root of multiplicity m, so the resultant is never zero.
  std::size_t k = 0;
  while (r.coeffs()[k].is_zero()) ++k;
  FieldElement trailing = r.coeffs()[k];
  return {std::move(r), static_cast<unsigned>(k), std::move(trailing), series.x_degree()};
}

FieldElement gdisc(const Polynomial& f) {
  require_nonzero(f);
  if (f.degree() < 2) throw Error(ErrorCode::kDegreeTooSmall, "gdisc needs deg f >= 2");
  return generalized_resultant(f).trailing / f.leading();
}

FieldElement tol(const Polynomial& f) {
  require_nonzero(f);
  const int n = f.degree();
  if (n <= 1) return FieldElement::one(f.field());
  const GeneralizedResultant g = generalized_resultant(f);
  const FieldElement& lc = f.leading();
  const mpz_class pair_count = mpz_class(n) * (n - 1) / 2;
  const mpz_class sign_exponent = pair_count - g.trailing_order / 2;
  return sign_power(f.field(), sign_exponent) * lc.pow(static_cast<long>(n - 1 - g.series_x_degree)) *
         (g.trailing / lc);
}

FieldElement dupl(const Polynomial& f) {
  require_nonzero(f);
  return f.leading() * f.leading() * tol(f);
}

FieldElement tol_from_roots(const RootMultiset& roots, unsigned n) {
  if (roots.leading.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "leading coefficient is zero");
  const FieldDescriptor& field = roots.leading.field();
  unsigned total = 0;
  for (std::size_t i = 0; i < roots.entries.size(); ++i) {
    require_same_field(field, roots.entries[i].root.field());
    total += roots.entries[i].multiplicity;
    for (std::size_t j = 0; j < i; ++j) {
      if (roots.entries[i].root == roots.entries[j].root) {
        throw Error(ErrorCode::kDuplicateRoots, "root " + roots.entries[i].root.to_string() + " listed twice");
      }
    }
  }
  if (total != n) {
    throw Error(ErrorCode::kDegreeMismatch,
                "multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  }
  if (n == 0) return FieldElement::one(field);
  FieldElement product = roots.leading.pow(2L * n - 2);
  for (std::size_t i = 0; i < roots.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.entries.size(); ++j) {
      const long e = 2L * roots.entries[i].multiplicity * roots.entries[j].multiplicity;
      product *= (roots.entries[i].root - roots.entries[j].root).pow(e);
    }
  }
  return product;
}

TrustedValue tol_irreducible(const Polynomial& f) {
  require_nonzero(f);
  if (f.degree() < 1) throw Error(ErrorCode::kConstantInput, "irreducible polynomials are nonconstant");
  const SeparableForm form = desubstitute(f.monic());
  const mpz_class inflation = ipow(f.field().char_exponent(), form.e);
  FieldElement value = discriminant(form.f_sep).pow(inflation) * f.leading().pow(2L * f.degree() - 2);
  return {std::move(value), !irreducibility_verified(f)};
}

std::string_view to_string(FormulaMode mode) {
  switch (mode) {
    case FormulaMode::kPaperSeparable: return "paper-separable";
    case FormulaMode::kPaperGeneral: return "paper-general";
    case FormulaMode::kCorrected: return "corrected";
  }
  return {};
}

FormulaMode parse_formula_mode(std::string_view text) {
  if (text == "paper-separable") return FormulaMode::kPaperSeparable;
  if (text == "paper-general") return FormulaMode::kPaperGeneral;
  if (text == "corrected") return FormulaMode::kCorrected;
  throw Error(ErrorCode::kSyntaxError, "unknown formula mode '" + std::string(text) + "'");
}

FieldElement tol_from_factorization(const Factorization& fac, FormulaMode mode) {
  const std::vector<PreparedFactor> parts = prepare(fac);
  const FieldDescriptor& field = fac.field();
  const unsigned n = fac.degree();
  FieldElement result = fac.unit.pow(n == 0 ? 0L : 2L * n - 2);

  for (const auto& part : parts) {
    if (mode == FormulaMode::kPaperSeparable && (part.form.e > 0 || !is_separable(part.factor->poly))) {
      throw Error(ErrorCode::kInseparableInSeparableMode,
                  "factor " + to_string(part.factor->poly) + " is not separable");
    }
    if (part.disc.is_zero()) {
      throw Error(ErrorCode::kZeroDiscriminantFactor,
                  "factor " + to_string(part.factor->poly) + " has a repeated root");
    }
  }

  switch (mode) {
    case FormulaMode::kPaperSeparable:
    case FormulaMode::kPaperGeneral: {
      const bool general = mode == FormulaMode::kPaperGeneral;
      mpz_class big_n = 0;
      for (const auto& part : parts) big_n += part.factor->multiplicity * (general ? part.inflation : mpz_class(1));
      for (const auto& part : parts) {
        const mpz_class weight = part.factor->multiplicity * (general ? part.inflation : mpz_class(1));
        result *= part.disc.pow(mpz_class(weight * (2 * weight - big_n)));
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          mpz_class e = mpz_class(parts[i].factor->multiplicity) * parts[j].factor->multiplicity;
          if (general) e *= parts[i].inflation * parts[j].inflation;
          result *= discriminant(parts[i].form.f_sep * parts[j].form.f_sep).pow(e);
        }
      }
      return result;
    }
    case FormulaMode::kCorrected: {
      for (const auto& part : parts) {
        const mpz_class m = part.factor->multiplicity;
        result *= part.disc.pow(mpz_class(m * m * part.inflation));
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          const unsigned top = std::max(parts[i].form.e, parts[j].form.e);
          const unsigned low = std::min(parts[i].form.e, parts[j].form.e);
          const FieldElement cross = sylvester_resultant(frobenius_twist(parts[i].form.f_sep, top - parts[i].form.e),
                                                         frobenius_twist(parts[j].form.f_sep, top - parts[j].form.e));
          const mpz_class e = 2 * mpz_class(parts[i].factor->multiplicity) * parts[j].factor->multiplicity *
                              ipow(field.char_exponent(), low);
          result *= cross.pow(e);
        }
      }
      return result;
    }
  }
  return result;
}

std::uint64_t homothety_exponent(const Polynomial& f) {
  require_nonzero(f);
  if (f.degree() < 1) return 0;
  const auto n = static_cast<std::uint64_t>(f.degree());
  std::uint64_t squares = 0;
  for (const auto& [m, count] : multiplicity_profile(f)) squares += std::uint64_t{count} * m * m;
  return n * n - 2 * n + squares;
}

std::uint64_t homothety_exponent(const Factorization& fac) {
  const std::uint64_t n = fac.degree();
  if (n == 0) return 0;
  std::uint64_t squares = 0;
  for (const auto& [m, count] : multiplicity_profile(fac)) squares += std::uint64_t{count} * m * m;
  return n * n - 2 * n + squares;
}

std::uint64_t homothety_exponent_from_resultant(const Polynomial& f) {
  require_nonzero(f);
  if (f.degree() < 1) return 0;
  const auto n = static_cast<std::uint64_t>(f.degree());
  return n * n - n + generalized_resultant(f).trailing_order;
}

bool in_T(const Polynomial& f) {
  require_nonzero(f);
  const Polynomial star = reciprocal(f);
  return tol(f) == tol(star);
}

bool inversion_criterion(const Factorization& fac) {
  const std::vector<PreparedFactor> parts = prepare(fac);
  const FieldDescriptor& field = fac.field();
  const unsigned n = fac.degree();
  FieldElement a0 = fac.unit;
  for (const auto& [g, m] : fac.factors) a0 *= g.constant_term().pow(static_cast<long>(m));
  if (a0.is_zero()) throw Error(ErrorCode::kZeroConstantTerm, "criterion needs a nonzero constant term");
  if (n == 0) return true;

  FieldElement lhs = FieldElement::one(field);
  for (const auto& part : parts) {
    const mpz_class m = part.factor->multiplicity;
    const mpz_class e = 2 * m * (mpz_class(n) - m * part.inflation);
    lhs *= part.form.f_sep.constant_term().pow(e);
  }
  const FieldElement rhs = (a0 / fac.unit).pow(2L * n - 2);
  return lhs == rhs;
}

}  // namespace tolerant
