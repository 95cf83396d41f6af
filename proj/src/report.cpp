#include "tolerant/report.hpp"

#include <algorithm>

#include "tolerant/expr.hpp"

namespace tolerant {

namespace {

template <class Fn>
void attempt(std::vector<ReportError>& errors, const char* op, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    errors.push_back(to_report_error(op, e));
  }
}

bool all_linear(const Factorization& fac) {
  return std::all_of(fac.factors.begin(), fac.factors.end(), [](const Factor& f) { return f.poly.degree() == 1; });
}

bool any_unverified(const Factorization& fac) {
  return std::any_of(fac.factors.begin(), fac.factors.end(),
                     [](const Factor& f) { return !irreducibility_verified(f.poly); });
}

InvariantReport build(const Polynomial& f, std::optional<FactorizationSource> source, const ReportOptions& options) {
  InvariantReport r{f.field(), to_string(f), f, {}, {}, {}, {}, {}, {}, {}, {}, false, {}};
  if (f.is_zero()) {
    r.errors.push_back({"input", std::string(to_string(ErrorCode::kZeroPolynomial)),
                        "the zero polynomial has no invariants", std::nullopt});
    return r;
  }
  attempt(r.errors, "tol", [&] {
    r.tol = tol(f);
    r.dupl = f.leading() * f.leading() * *r.tol;
  });
  attempt(r.errors, "gdisc", [&] { r.gdisc = gdisc(f); });
  attempt(r.errors, "disc", [&] {
    r.disc = discriminant(f);
    r.separable = is_separable(f);
  });
  if (!f.constant_term().is_zero()) attempt(r.errors, "in_T", [&] { r.in_T = in_T(f); });

  if (!source) source = factorization_for(f, options, &r.errors);
  if (source) {
    r.trusted_input = source->trusted_input;
    const Factorization& fac = source->factorization;
    attempt(r.errors, "homothety_exponent", [&] { r.homothety_exponent = homothety_exponent(fac); });
    attempt(r.errors, "paths", [&] {
      if (!r.tol) return;
      bool agree = tol_from_factorization(fac, FormulaMode::kCorrected) == *r.tol;
      if (all_linear(fac)) {
        RootMultiset roots{{}, fac.unit};
        for (const auto& [g, m] : fac.factors) roots.entries.push_back({-g.constant_term(), m});
        agree = agree && tol_from_roots(roots, fac.degree()) == *r.tol;
      }
      if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1) {
        agree = agree && tol_irreducible(f).value == *r.tol;
      }
      r.paths_agree = agree;
    });
    if (r.tol && !r.paths_agree) r.paths_agree = false;
  } else {
    attempt(r.errors, "homothety_exponent", [&] { r.homothety_exponent = homothety_exponent_from_resultant(f); });
  }
  return r;
}

}  // namespace

ReportError to_report_error(std::string op, const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return {std::move(op), std::string(to_string(err->code())), err->what(), err->position()};
  }
  return {std::move(op), "INTERNAL_ERROR", e.what(), std::nullopt};
}

std::optional<FactorizationSource> factorization_for(const Polynomial& f, const ReportOptions& options,
                                                     std::vector<ReportError>* errors) {
  if (f.degree() < 1) return std::nullopt;
  try {
    if (options.assert_irreducible) {
      return FactorizationSource{{f.leading(), {{f.monic(), 1}}}, !irreducibility_verified(f)};
    }
    if (f.field().kind() == FieldKind::kPrimeField) {
      return FactorizationSource{factor_prime_field(f, options.seed), false};
    }
    return FactorizationSource{squarefree_decomposition(f), false};
  } catch (const std::exception& e) {
    if (errors) errors->push_back(to_report_error("factorization", e));
  }
  return std::nullopt;
}

InvariantReport make_report(const Polynomial& f, const ReportOptions& options) {
  return build(f, std::nullopt, options);
}

InvariantReport make_report(const Factorization& fac, const ReportOptions& options) {
  return build(fac.expand(), FactorizationSource{fac, any_unverified(fac)}, options);
}

InvariantReport make_report(std::string_view text, const FieldDescriptor& field, bool factored,
                            const ReportOptions& options) {
  try {
    if (factored) return make_report(parse_factored(text, field), options);
    return make_report(parse_polynomial(text, field), options);
  } catch (const std::exception& e) {
    InvariantReport r{field, std::string(text), {}, {}, {}, {}, {}, {}, {}, {}, {}, false, {}};
    r.errors.push_back(to_report_error("parse", e));
    return r;
  }
}

nlohmann::json to_json(const ReportError& error) {
  nlohmann::json j{{"op", error.op}, {"code", error.code}, {"message", error.message}};
  if (error.position) j["position"] = *error.position;
  return j;
}

nlohmann::json to_json(const InvariantReport& r) {
  auto element = [](const std::optional<FieldElement>& v) -> nlohmann::json {
    return v ? nlohmann::json(v->to_string()) : nlohmann::json(nullptr);
  };
  auto flag = [](const std::optional<bool>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["field"] = r.field.to_string();
  j["input"] = r.input;
  if (!r.polynomial) {
    j["degree"] = nullptr;
  } else if (r.polynomial->is_zero()) {
    j["degree"] = "NEG_INFINITY";
  } else {
    j["degree"] = r.polynomial->degree();
  }
  j["tol"] = element(r.tol);
  j["dupl"] = element(r.dupl);
  j["gdisc"] = element(r.gdisc);
  j["disc"] = r.disc && r.disc->is_zero() ? nlohmann::json("REPEATED_ROOT") : element(r.disc);
  j["separable"] = flag(r.separable);
  j["in_T"] = r.in_T ? nlohmann::json(*r.in_T) : nlohmann::json("UNDEFINED");
  j["homothety_exponent"] = r.homothety_exponent ? nlohmann::json(*r.homothety_exponent) : nlohmann::json("UNAVAILABLE");
  j["paths_agree"] = flag(r.paths_agree);
  j["trusted_input"] = r.trusted_input;
  j["errors"] = nlohmann::json::array();
  for (const auto& e : r.errors) j["errors"].push_back(to_json(e));
  return j;
}

}  // namespace tolerant
