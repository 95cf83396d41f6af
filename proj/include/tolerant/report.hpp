#pragma once

// Invariant reports, the selfcheck harness and batch processing behind the
// command line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tolerant/tolerant.hpp"

namespace tolerant {

struct ReportError {
  std::string op;
  std::string code;  // ErrorCode wire name
  std::string message;
  std::optional<std::size_t> position;
};

// Every invariant of one input. Absent optionals serialize as markers:
// disc zero -> "REPEATED_ROOT", in_T absent -> "UNDEFINED",
// homothety_exponent absent -> "UNAVAILABLE", paths_agree absent -> null
// (no factorization to compare against), others -> null.
struct InvariantReport {
  FieldDescriptor field;
  std::string input;
  std::optional<Polynomial> polynomial;
  std::optional<FieldElement> tol;
  std::optional<FieldElement> dupl;
  std::optional<FieldElement> gdisc;
  std::optional<FieldElement> disc;
  std::optional<bool> separable;
  std::optional<bool> in_T;
  std::optional<std::uint64_t> homothety_exponent;
  std::optional<bool> paths_agree;
  bool trusted_input = false;
  std::vector<ReportError> errors;
};

struct ReportOptions {
  // Treat the whole (nonfactored) input as one irreducible factor.
  bool assert_irreducible = false;
  std::uint64_t seed = kDefaultSeed;
};

// The factorization used for the cross-path comparison: the supplied one
// (factors asserted irreducible), the full F_p factorization, or a complete
// squarefree decomposition. Absent when none applies.
struct FactorizationSource {
  Factorization factorization;
  bool trusted_input = false;
};
std::optional<FactorizationSource> factorization_for(const Polynomial& f, const ReportOptions& options,
                                                     std::vector<ReportError>* errors = nullptr);

InvariantReport make_report(const Polynomial& f, const ReportOptions& options = {});
InvariantReport make_report(const Factorization& fac, const ReportOptions& options = {});
// Parses, then reports; parse failures become error records. Never throws.
InvariantReport make_report(std::string_view text, const FieldDescriptor& field, bool factored,
                            const ReportOptions& options = {});

ReportError to_report_error(std::string op, const std::exception& e);

nlohmann::json to_json(const InvariantReport& report);
nlohmann::json to_json(const ReportError& error);

// ---------------------------------------------------------------------------

struct SelfcheckConfig {
  std::uint64_t seed = 42;
  unsigned count = 500;
  FieldDescriptor field = FieldDescriptor::prime_field(101);
  unsigned max_degree = 8;
};

struct CheckTally {
  std::string name;
  unsigned passed = 0;
  unsigned failed = 0;
};

struct SelfcheckSummary {
  SelfcheckConfig config;
  std::vector<CheckTally> checks;
  unsigned failures = 0;
  std::optional<nlohmann::json> first_counterexample;

  bool ok() const { return failures == 0; }
};

// Generates `count` inputs with known factorizations and runs every path
// agreement and invariance check on each. Deterministic in the config.
SelfcheckSummary selfcheck(const SelfcheckConfig& config);
nlohmann::json to_json(const SelfcheckSummary& summary);

// ---------------------------------------------------------------------------

struct BatchLine {
  std::size_t line_number;
  FieldDescriptor field;
  std::string text;
};

// One expression per line; '#' starts a comment; blank lines are skipped; a
// leading "@<field>" token overrides the default field for that line.
std::vector<BatchLine> parse_batch(std::string_view contents, const FieldDescriptor& default_field);
// Reports in input order; lines are evaluated concurrently.
std::vector<nlohmann::json> run_batch(const std::vector<BatchLine>& lines, bool factored,
                                      const ReportOptions& options, unsigned threads = 0);

}  // namespace tolerant
