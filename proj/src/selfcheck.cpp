#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "tolerant/expr.hpp"
#include "tolerant/generators.hpp"
#include "tolerant/report.hpp"

namespace tolerant {

namespace {

bool all_unramified(const Factorization& fac) {
  return std::all_of(fac.factors.begin(), fac.factors.end(),
                     [](const Factor& f) { return desubstitute(f.poly).e == 0; });
}

bool same_factors(const Factorization& a, const Factorization& b) {
  if (!(a.unit == b.unit) || a.factors.size() != b.factors.size()) return false;
  return std::all_of(a.factors.begin(), a.factors.end(), [&](const Factor& f) {
    return std::any_of(b.factors.begin(), b.factors.end(),
                       [&](const Factor& g) { return g.poly == f.poly && g.multiplicity == f.multiplicity; });
  });
}

class Harness {
 public:
  explicit Harness(SelfcheckSummary& summary) : summary_(summary) {}

  // Runs one check; exceptions count as failures.
  void run(const std::string& name, const GeneratedCase& c, const std::function<bool()>& check) {
    bool ok = false;
    std::string detail;
    try {
      ok = check();
      if (!ok) detail = "values disagree";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    CheckTally& tally = tally_for(name);
    if (ok) {
      ++tally.passed;
      return;
    }
    ++tally.failed;
    ++summary_.failures;
    if (!summary_.first_counterexample) {
      summary_.first_counterexample = nlohmann::json{{"check", name},
                                                     {"polynomial", to_string(c.polynomial)},
                                                     {"factorization", to_string(c.factorization)},
                                                     {"detail", detail}};
    }
  }

 private:
  CheckTally& tally_for(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, summary_.checks.size()).first;
      summary_.checks.push_back({name, 0, 0});
    }
    return summary_.checks[it->second];
  }

  SelfcheckSummary& summary_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

SelfcheckSummary selfcheck(const SelfcheckConfig& config) {
  SelfcheckSummary summary{config, {}, 0, std::nullopt};
  Harness h(summary);
  const FieldDescriptor& field = config.field;
  CaseGenerator gen(field, config.seed, {config.max_degree, 3, false});

  for (unsigned i = 0; i < config.count; ++i) {
    const GeneratedCase c = gen.next();
    const Polynomial& f = c.polynomial;
    const Factorization& fac = c.factorization;
    const auto n = static_cast<unsigned>(f.degree());
    const FieldElement value = tol(f);
    const FieldElement alpha = gen.random_element();
    const FieldElement scale = gen.random_nonzero();

    h.run("tol_nonzero_canonical", c, [&] { return !value.is_zero() && value.is_canonical(); });
    h.run("resultant_vs_corrected", c, [&] { return tol_from_factorization(fac, FormulaMode::kCorrected) == value; });
    if (c.roots) {
      h.run("resultant_vs_roots", c, [&] { return tol_from_roots(*c.roots, n) == value; });
    }
    h.run("resultant_vs_irreducible", c, [&] {
      return std::all_of(fac.factors.begin(), fac.factors.end(),
                         [](const Factor& g) { return tol_irreducible(g.poly).value == tol(g.poly); });
    });
    if (all_unramified(fac)) {
      h.run("paper_separable_vs_corrected", c,
            [&] { return tol_from_factorization(fac, FormulaMode::kPaperSeparable) == value; });
      h.run("paper_general_vs_corrected", c,
            [&] { return tol_from_factorization(fac, FormulaMode::kPaperGeneral) == value; });
    }
    if (n >= 1 && is_separable(f)) {
      h.run("separable_tol_equals_disc", c, [&] { return discriminant(f) == value; });
    }
    if (n >= 2) {
      h.run("gdisc_sign_law", c, [&] {
        std::uint64_t squares = 0;
        for (const auto& cls : multiplicity_profile(fac)) {
          squares += std::uint64_t{cls.root_count} * cls.multiplicity * cls.multiplicity;
        }
        const std::uint64_t cross = (std::uint64_t{n} * n - squares) / 2;
        FieldElement expected = f.leading().pow(static_cast<long>(hasse_series(f).x_degree()) - n + 1) * value;
        if (cross % 2 == 1) expected = -expected;
        return gdisc(f) == expected;
      });
    }
    h.run("dupl_relation", c, [&] { return dupl(f) == f.leading() * f.leading() * value; });
    h.run("translation_invariance", c, [&] { return tol(taylor_shift(f, alpha)) == value; });
    h.run("homothety_law", c, [&] {
      return tol(homothety(f, scale)) == scale.pow(static_cast<long>(homothety_exponent(fac))) * value;
    });
    h.run("homothety_exponent_routes", c,
          [&] { return homothety_exponent(fac) == homothety_exponent_from_resultant(f); });
    if (!f.constant_term().is_zero()) {
      h.run("criterion_vs_in_T", c, [&] { return inversion_criterion(fac) == in_T(f); });
    }
    h.run("factorization_reconstructs", c, [&] {
      if (field.kind() == FieldKind::kPrimeField) return same_factors(factor_prime_field(f), fac);
      const SquarefreeParts parts = squarefree_parts(f);
      return parts.factorization.expand() * parts.residual == f;
    });
    h.run("print_parse_round_trip", c, [&] {
      return parse_polynomial(to_string(f), field) == f && parse_factored(to_string(fac), field).expand() == f;
    });
    h.run("taylor_identity", c, [&] {
      const Polynomial shifted = taylor_shift(f, alpha);
      for (unsigned r = 0; r <= n; ++r) {
        if (!(shifted.coeff(r) == hasse_derivative(f, r).evaluate(alpha))) return false;
      }
      return true;
    });
  }
  return summary;
}

nlohmann::json to_json(const SelfcheckSummary& summary) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& t : summary.checks) {
    checks.push_back({{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}});
  }
  return {{"seed", summary.config.seed},
          {"count", summary.config.count},
          {"field", summary.config.field.to_string()},
          {"max_degree", summary.config.max_degree},
          {"checks", checks},
          {"failures", summary.failures},
          {"ok", summary.ok()},
          {"first_counterexample", summary.first_counterexample ? *summary.first_counterexample : nlohmann::json()}};
}

std::vector<BatchLine> parse_batch(std::string_view contents, const FieldDescriptor& default_field) {
  std::vector<BatchLine> lines;
  std::size_t number = 0;
  while (!contents.empty()) {
    ++number;
    const std::size_t end = contents.find('\n');
    std::string_view line = contents.substr(0, end);
    contents = end == std::string_view::npos ? std::string_view{} : contents.substr(end + 1);

    line = line.substr(0, line.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);

    FieldDescriptor field = default_field;
    if (line.front() == '@') {
      const std::size_t space = std::min(line.find_first_of(" \t"), line.size());
      try {
        field = FieldDescriptor::parse(line.substr(1, space - 1));
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(number) + ": " + e.what());
      }
      line = line.substr(space);
      line = line.substr(std::min(line.find_first_not_of(" \t"), line.size()));
    }
    lines.push_back({number, field, std::string(line)});
  }
  return lines;
}

std::vector<nlohmann::json> run_batch(const std::vector<BatchLine>& lines, bool factored,
                                      const ReportOptions& options, unsigned threads) {
  std::vector<nlohmann::json> out(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      const BatchLine& line = lines[i];
      out[i] = to_json(make_report(line.text, line.field, factored, options));
      out[i]["line"] = line.line_number;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, lines.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return out;
}

}  // namespace tolerant
