// One PASS/FAIL line per acceptance criterion. Usage: acceptance [N ...]
// With no arguments every criterion runs. Exits 1 when any selected criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "tolerant/expr.hpp"
#include "tolerant/generators.hpp"
#include "tolerant/report.hpp"
#include "tolerant/tolerant.hpp"

#ifndef TOLERANT_CLI_PATH
#define TOLERANT_CLI_PATH "tolerant"
#endif
#ifndef TOLERANT_CORPUS_DIR
#define TOLERANT_CORPUS_DIR "tests/corpus"
#endif

namespace {

using namespace tolerant;

// Exact arithmetic throughout: every comparison is equality, tolerance zero.
constexpr double kFuzzBudgetSeconds = 30.0;
constexpr unsigned kFuzzCases = 500;
constexpr unsigned kOracleCases = 200;
constexpr unsigned kTranslationPairs = 200;
constexpr unsigned kHomothetyPairs = 100;
constexpr unsigned kMultiplicativityCases = 100;
constexpr unsigned kCriterionCases = 200;
constexpr unsigned kTaylorPairs = 100;

FieldDescriptor Q() { return FieldDescriptor::rationals(); }
FieldDescriptor Fp(std::uint64_t p) { return FieldDescriptor::prime_field(p); }
FieldDescriptor Fpt(std::uint64_t p) { return FieldDescriptor::rational_function_field(p); }

FieldElement constant(const std::string& text, const FieldDescriptor& field) {
  return parse_polynomial(text, field).leading();
}

// Every tolerant value produced by the criteria, for the nonvanishing check.
struct Ledger {
  std::size_t seen = 0;
  std::size_t bad = 0;
  std::string first_bad;
} tol_ledger;

FieldElement record(const FieldElement& value, const std::string& where) {
  ++tol_ledger.seen;
  if (value.is_zero() || !value.is_canonical()) {
    if (tol_ledger.bad++ == 0) tol_ledger.first_bad = where + " -> " + value.to_string();
  }
  return value;
}

FieldElement tol_of(const Polynomial& f) { return record(tol(f), to_string(f)); }
FieldElement tol_of(const Factorization& fac, FormulaMode mode) {
  return record(tol_from_factorization(fac, mode), to_string(fac) + " [" + std::string(to_string(mode)) + "]");
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (pass) notes.push_back("first failure: " + why);
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void note(const std::string& text) { notes.push_back(text); }
};

std::string pair_text(const FieldElement& a, const FieldElement& b) { return a.to_string() + " vs " + b.to_string(); }

Outcome paper_examples() {
  Outcome out;
  const std::array<std::array<const char*, 3>, 3> cases{{
      {"(x-2)^2*(x-3)", "1", "16"},
      {"(x-2)^2*(x+1/4)", "6561/256", "6561/16"},
      {"(x-1)^2*(x-2)^2", "1", "16"},
  }};
  for (const auto& [text, direct, inverted] : cases) {
    const Polynomial f = parse_polynomial(text, Q());
    const FieldElement a = tol_of(f), b = tol_of(reciprocal(f));
    out.expect(a == constant(direct, Q()), std::string(text) + ": " + a.to_string());
    out.expect(b == constant(inverted, Q()), std::string(text) + " reciprocal: " + b.to_string());
  }
  return out;
}

Outcome palindromic_family() {
  Outcome out;
  for (unsigned n = 1; n <= 10; ++n) {
    const Polynomial f = parse_polynomial("(x-1)^" + std::to_string(n), Q());
    const FieldElement one = FieldElement::one(Q());
    out.expect(tol_of(f) == one && tol_of(reciprocal(f)) == one, "n = " + std::to_string(n));
  }
  return out;
}

FieldElement sign(const FieldDescriptor& field, std::uint64_t exponent) {
  return exponent % 2 == 0 ? FieldElement::one(field) : -FieldElement::one(field);
}

Outcome cross_method_fuzz() {
  Outcome out;
  const FieldDescriptor field = Fp(101);
  CaseGenerator gen(field, 42, {8, 3, true});
  unsigned law_holds = 0, corrected_law_holds = 0, separable = 0;
  std::string first_law_break;
  const auto start = std::chrono::steady_clock::now();
  for (unsigned i = 0; i < kFuzzCases; ++i) {
    const GeneratedCase c = gen.next();
    const Polynomial& f = c.polynomial;
    const std::string where = to_string(c.factorization);
    const FieldElement via_resultant = tol_of(f);
    const FieldElement via_factors = tol_of(c.factorization, FormulaMode::kCorrected);
    out.expect(via_resultant == via_factors, where + ": " + pair_text(via_resultant, via_factors));
    if (is_separable(f)) {
      ++separable;
      out.expect(via_resultant == discriminant(f), where + ": tol != disc");
    }
    if (f.degree() < 2) {
      ++law_holds;
      ++corrected_law_holds;
      continue;
    }
    const std::uint64_t n = f.degree();
    const FieldElement g = gdisc(f);
    // Stated law, verbatim.
    if (g == sign(field, n * (n - 1) / 2) * via_resultant) {
      ++law_holds;
    } else if (first_law_break.empty()) {
      first_law_break = where + ": gdisc " + g.to_string() + ", tol " + via_resultant.to_string();
    }
    const GeneralizedResultant r = generalized_resultant(f);
    if (g == sign(field, n * (n - 1) / 2 + r.trailing_order / 2) * via_resultant) ++corrected_law_holds;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.expect(law_holds == kFuzzCases, "gdisc = (-1)^binom(n,2) tol held on " + std::to_string(law_holds) + "/" +
                                           std::to_string(kFuzzCases) + "; " + first_law_break);
  out.expect(seconds < kFuzzBudgetSeconds, "runtime " + std::to_string(seconds) + " s");
  out.note(std::to_string(separable) + " separable cases, runtime " + std::to_string(seconds) + " s");
  out.note("gdisc = (-1)^(binom(n,2) + ord_u/2) tol held on " + std::to_string(corrected_law_holds) + "/" +
           std::to_string(kFuzzCases));
  return out;
}

Outcome rational_root_oracle() {
  Outcome out;
  CaseGenerator gen(Q(), 7, {8, 3, false});
  for (unsigned i = 0; i < kOracleCases; ++i) {
    const GeneratedCase c = gen.next();
    if (!c.roots) {
      out.fail("generator produced a non-linear factor");
      continue;
    }
    const FieldElement a = record(tol_from_roots(*c.roots, c.polynomial.degree()), "roots");
    const FieldElement b = tol_of(c.polynomial);
    out.expect(a == b, to_string(c.factorization) + ": " + pair_text(a, b));
  }
  return out;
}

Outcome invariance() {
  Outcome out;
  for (const FieldDescriptor& field : {Q(), Fp(101)}) {
    CaseGenerator gen(field, 11, {8, 3, false});
    for (unsigned i = 0; i < kTranslationPairs; ++i) {
      const Polynomial f = gen.next().polynomial;
      const FieldElement alpha = gen.random_element();
      const FieldElement a = tol_of(f), b = tol_of(taylor_shift(f, alpha));
      out.expect(a == b, to_string(f) + " shifted by " + alpha.to_string());
    }
  }
  const Polynomial cubic = parse_polynomial("(x-2)^2*(x-3)", Q());
  out.expect(homothety_exponent(cubic) == 8, "exponent of (x-2)^2*(x-3) is " + std::to_string(homothety_exponent(cubic)));
  CaseGenerator gen(Q(), 13, {8, 3, false});
  for (unsigned i = 0; i < kHomothetyPairs; ++i) {
    const GeneratedCase c = i == 0 ? GeneratedCase{squarefree_decomposition(cubic), cubic, std::nullopt} : gen.next();
    const FieldElement alpha = gen.random_nonzero();
    const std::uint64_t e = homothety_exponent(c.polynomial);
    const FieldElement lhs = tol_of(homothety(c.polynomial, alpha));
    const FieldElement rhs = alpha.pow(static_cast<long>(e)) * tol_of(c.polynomial);
    out.expect(lhs == rhs, to_string(c.polynomial) + " scaled by " + alpha.to_string() + ": " + pair_text(lhs, rhs));
  }
  return out;
}

Outcome inseparable_cases() {
  Outcome out;
  const FieldDescriptor k = Fpt(5);
  struct Case {
    const char* factored;
    const char* expected;
  };
  for (const Case& c : {Case{"x^5 - t", "1"}, Case{"x^10 - t", "4*t^5"}, Case{"(x^10 - t)^2", "(4*t)^20"}}) {
    const Factorization fac = parse_factored(c.factored, k);
    const Polynomial f = fac.expand();
    const FieldElement expected = constant(c.expected, k);
    const FieldElement via_resultant = tol_of(f);
    const FieldElement via_factors = tol_of(fac, FormulaMode::kCorrected);
    out.expect(via_resultant == expected, std::string(c.factored) + ": " + via_resultant.to_string());
    out.expect(via_factors == expected, std::string(c.factored) + " corrected: " + via_factors.to_string());
    if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1) {
      const FieldElement irreducible = record(tol_irreducible(f).value, c.factored);
      out.expect(irreducible == expected, std::string(c.factored) + " via disc(f_sep)^(p^e): " + irreducible.to_string());
    }
    out.note(std::string(c.factored) + " -> " + via_resultant.to_string());
  }
  return out;
}

Outcome erratum_record() {
  Outcome out;
  const FieldDescriptor k = Fpt(5);
  for (const char* text : {"(x^5 - t)*(x - 1)", "x^10 - t"}) {
    const Factorization fac = parse_factored(text, k);
    const FieldElement via_resultant = tol_of(fac.expand());
    const FieldElement corrected = tol_of(fac, FormulaMode::kCorrected);
    const FieldElement printed = tol_of(fac, FormulaMode::kPaperGeneral);
    out.expect(via_resultant == corrected, std::string(text) + ": " + pair_text(via_resultant, corrected));
    out.note(std::string(text) + ": resultant " + via_resultant.to_string() + ", paper-general " + printed.to_string() +
             (printed == corrected ? " (match)" : " (mismatch)"));
  }
  return out;
}

// Separable with nonzero constant term, or a palindromic product
// (x - r)^m (x - 1/r)^m (x - 1)^a (x + 1)^b.
Polynomial member_of_T(CaseGenerator& gen, const FieldDescriptor& field, bool palindromic) {
  for (;;) {
    Polynomial f(field);
    if (palindromic) {
      f = Polynomial::constant(gen.random_nonzero());
      const unsigned pairs = gen.uniform(1, 2);
      for (unsigned i = 0; i < pairs; ++i) {
        const FieldElement r = gen.random_nonzero();
        const Polynomial a = Polynomial::x(field) - Polynomial::constant(r);
        const Polynomial b = Polynomial::x(field) - Polynomial::constant(r.inverse());
        f = f * (a * b).pow(gen.uniform(1, 3));
      }
      f = f * (Polynomial::x(field) - Polynomial::constant(FieldElement::one(field))).pow(gen.uniform(0, 3));
    } else {
      f = gen.random_polynomial(gen.uniform(1, 5));
    }
    if (f.constant_term().is_zero()) continue;
    if (!palindromic && !is_separable(f)) continue;
    return f;
  }
}

Outcome t_multiplicativity() {
  Outcome out;
  unsigned built = 0;
  for (const FieldDescriptor& field : {Q(), Fp(101)}) {
    CaseGenerator gen(field, 17, {});
    while (built < kMultiplicativityCases * (field == Q() ? 1 : 2) / 2) {
      const Polynomial g = member_of_T(gen, field, built % 2 == 0);
      const Polynomial h = member_of_T(gen, field, built % 3 == 0);
      if (gcd(g, h).degree() > 0) continue;
      if (!in_T(g) || !in_T(h)) {
        out.fail("constructed factor not in T: " + to_string(in_T(g) ? h : g));
        ++built;
        continue;
      }
      record(tol(g * h), "g*h");
      out.expect(in_T(g * h), to_string(g) + " times " + to_string(h));
      ++built;
    }
  }
  out.note(std::to_string(built) + " pairs");
  return out;
}

Outcome criterion_equivalence() {
  Outcome out;
  unsigned members = 0, total = 0;
  for (const FieldDescriptor& field : {Q(), Fp(101)}) {
    CaseGenerator gen(field, 19, {8, 3, false});
    for (unsigned i = 0; i < kCriterionCases / 2;) {
      GeneratedCase c = gen.next();
      if (i % 4 == 0) {
        // Nudge toward members: r and 1/r with equal multiplicity.
        const Polynomial pal = member_of_T(gen, field, true);
        if (gcd(pal, c.polynomial).degree() > 0) continue;
        c.factorization = squarefree_decomposition(pal * c.polynomial);
        c.polynomial = c.factorization.expand();
      }
      if (c.polynomial.constant_term().is_zero()) continue;
      const bool a = inversion_criterion(c.factorization);
      const bool b = in_T(c.polynomial);
      record(tol(c.polynomial), "criterion");
      out.expect(a == b, to_string(c.factorization));
      members += b;
      ++total;
      ++i;
    }
  }
  out.note(std::to_string(members) + "/" + std::to_string(total) + " inputs in T");
  return out;
}

Outcome taylor_identity() {
  Outcome out;
  const std::vector<std::pair<FieldDescriptor, unsigned>> lanes{{Q(), 40}, {Fp(5), 30}, {Fpt(5), 30}};
  unsigned pairs = 0;
  for (const auto& [field, count] : lanes) {
    CaseGenerator gen(field, 23, {});
    for (unsigned i = 0; i < count; ++i, ++pairs) {
      const Polynomial f = gen.random_polynomial(gen.uniform(1, 10));
      const FieldElement alpha = gen.random_element();
      const Polynomial shifted = taylor_shift(f, alpha);
      for (int k = 0; k <= f.degree(); ++k) {
        out.expect(shifted.coeff(k) == hasse_derivative(f, k).evaluate(alpha),
                   to_string(f) + " at " + alpha.to_string() + ", index " + std::to_string(k));
      }
    }
  }
  out.expect(pairs == kTaylorPairs, "pair count");
  return out;
}

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& command) {
  Run r{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome cli_contract() {
  Outcome out;
  unsigned lines = 0;
  for (const auto& entry : std::filesystem::directory_iterator(TOLERANT_CORPUS_DIR)) {
    if (entry.path().extension() != ".txt") continue;
    std::ifstream in(entry.path());
    std::stringstream text;
    text << in.rdbuf();
    for (const BatchLine& line : parse_batch(text.str(), Q())) {
      const std::string where = entry.path().filename().string() + ":" + std::to_string(line.line_number);
      try {
        const Polynomial f = parse_polynomial(line.text, line.field);
        out.expect(parse_polynomial(to_string(f), line.field) == f, where + " printed as " + to_string(f));
        ++lines;
      } catch (const Error& e) {
        out.fail(where + ": " + e.what());
      }
    }
  }
  out.expect(lines > 0, "empty corpus");
  out.note(std::to_string(lines) + " corpus lines round-tripped");

  const std::string cli = TOLERANT_CLI_PATH;
  const Run first = run("'" + cli + "' selfcheck --seed 42");
  const Run second = run("'" + cli + "' selfcheck --seed 42");
  out.expect(first.status == 0, "selfcheck exit " + std::to_string(first.status));
  out.expect(!first.out.empty() && first.out == second.out, "selfcheck output differs between runs");

  const Run bad = run("'" + cli + "' tol 'x^^2' 2>/dev/null");
  out.expect(bad.status == 1, "malformed input exit " + std::to_string(bad.status));
  try {
    const auto j = nlohmann::json::parse(bad.out);
    out.expect(j["error"]["position"] == 2, "position " + j["error"].dump());
  } catch (const std::exception& e) {
    out.fail(std::string("unparseable error output: ") + e.what());
  }
  return out;
}

Outcome nonvanishing() {
  Outcome out;
  out.expect(tol_ledger.bad == 0, tol_ledger.first_bad);
  out.expect(tol_ledger.seen > 0, "no tol values recorded");
  out.note(std::to_string(tol_ledger.seen) + " tol values checked");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "worked examples and reciprocals", paper_examples},
      {2, "tol((x-1)^n) = tol of reciprocal = 1, n = 1..10", palindromic_family},
      {3, "cross-method fuzz over F_101 with sign law", cross_method_fuzz},
      {4, "rational-root oracle over Q", rational_root_oracle},
      {5, "translation and homothety invariance", invariance},
      {6, "inseparable cases over F_5(t)", inseparable_cases},
      {7, "general-formula comparison recorded", erratum_record},
      {8, "T is closed under coprime products", t_multiplicativity},
      {9, "inversion criterion agrees with in_T", criterion_equivalence},
      {11, "Taylor identity", taylor_identity},
      {12, "CLI contract", cli_contract},
      {10, "every tol is a nonzero canonical element", nonvanishing},
  };

  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::stoi(argv[i]));
  const bool all = wanted.empty();
  // Criterion 10 audits the values produced by the others, so it pulls them in.
  const bool audit = all || std::find(wanted.begin(), wanted.end(), 10) != wanted.end();

  int failures = 0;
  for (const Criterion& c : criteria) {
    const bool selected = all || std::find(wanted.begin(), wanted.end(), c.id) != wanted.end();
    if (!selected && !(audit && c.id != 12)) continue;
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!selected) continue;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "\n";
    for (const std::string& n : o.notes) std::cout << "        " << n << "\n";
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
