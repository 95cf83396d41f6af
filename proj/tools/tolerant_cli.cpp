// tolerant: exact tolerant / duplicant / generalized discriminant calculator.
//
//   tolerant tol "(x-2)^2*(x-3)"
//   tolerant report --field fpt:5 --factored "(x^5 - t)*(x - 1)"
//   tolerant selfcheck --seed 42 --count 500 --field fp:101
//   tolerant batch corpus.txt --field q

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tolerant/expr.hpp"
#include "tolerant/report.hpp"

namespace {

using tolerant::FieldDescriptor;
using nlohmann::json;

constexpr int kInputError = 1;
constexpr int kCheckFailure = 2;

struct Options {
  std::string field = "q";
  bool factored = false;
  bool assert_irreducible = false;
  std::string mode;
  std::uint64_t seed = 42;
  unsigned count = 500;
  unsigned max_degree = 8;
  unsigned threads = 0;
  bool pretty = false;
  std::string output;
  std::string expression;
  std::string batch_file;
};

class Sink {
 public:
  Sink(const std::string& path, bool pretty) : pretty_(pretty) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }

  void write(const json& j) { (file_.is_open() ? file_ : std::cout) << j.dump(pretty_ ? 2 : -1) << '\n'; }

 private:
  bool pretty_;
  std::ofstream file_;
};

int input_error(const std::string& op, const std::exception& e) {
  const auto record = tolerant::to_report_error(op, e);
  std::cerr << "error: " << record.message << '\n';
  std::cout << json{{"error", tolerant::to_json(record)}}.dump() << '\n';
  return kInputError;
}

// tol, dupl, gdisc and disc on a single expression.
int run_invariant(const std::string& op, const Options& o) {
  Sink sink(o.output, o.pretty);
  const FieldDescriptor field = FieldDescriptor::parse(o.field);
  json out{{"field", field.to_string()}, {"input", o.expression}};
  if (op == "tol" && !o.mode.empty()) {
    const auto mode = tolerant::parse_formula_mode(o.mode);
    const tolerant::Factorization fac = o.factored ? tolerant::parse_factored(o.expression, field)
                                                   : tolerant::squarefree_decomposition(
                                                         tolerant::parse_polynomial(o.expression, field));
    out["mode"] = std::string(tolerant::to_string(mode));
    out["tol"] = tolerant::tol_from_factorization(fac, mode).to_string();
    sink.write(out);
    return 0;
  }
  const tolerant::Polynomial f = o.factored ? tolerant::parse_factored(o.expression, field).expand()
                                            : tolerant::parse_polynomial(o.expression, field);
  tolerant::FieldElement value = tolerant::FieldElement::zero(field);
  if (op == "tol") value = tolerant::tol(f);
  if (op == "dupl") value = tolerant::dupl(f);
  if (op == "gdisc") value = tolerant::gdisc(f);
  if (op == "disc") value = tolerant::discriminant(f);
  out[op] = op == "disc" && value.is_zero() ? "REPEATED_ROOT" : value.to_string();
  sink.write(out);
  return 0;
}

int run_report(const Options& o) {
  Sink sink(o.output, o.pretty);
  const FieldDescriptor field = FieldDescriptor::parse(o.field);
  const auto report = tolerant::make_report(o.expression, field, o.factored, {o.assert_irreducible, tolerant::kDefaultSeed});
  sink.write(tolerant::to_json(report));
  const bool parse_failed = std::any_of(report.errors.begin(), report.errors.end(),
                                        [](const tolerant::ReportError& e) { return e.op == "parse"; });
  if (parse_failed) std::cerr << "error: " << report.errors.front().message << '\n';
  return parse_failed ? kInputError : 0;
}

int run_selfcheck(const Options& o) {
  Sink sink(o.output, o.pretty);
  const tolerant::SelfcheckConfig config{o.seed, o.count, FieldDescriptor::parse(o.field), o.max_degree};
  const auto summary = tolerant::selfcheck(config);
  sink.write(tolerant::to_json(summary));
  return summary.ok() ? 0 : kCheckFailure;
}

int run_batch(const Options& o) {
  std::ifstream in(o.batch_file);
  if (!in) throw std::runtime_error("cannot open " + o.batch_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto lines = tolerant::parse_batch(buffer.str(), FieldDescriptor::parse(o.field));
  Sink sink(o.output, o.pretty);
  bool any_parse_error = false;
  for (const json& j : tolerant::run_batch(lines, o.factored, {o.assert_irreducible, tolerant::kDefaultSeed}, o.threads)) {
    for (const auto& e : j["errors"]) any_parse_error |= e["op"] == "parse";
    sink.write(j);
  }
  return any_parse_error ? kInputError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact tolerant, duplicant and generalized discriminant of univariate polynomials"};
  app.require_subcommand(1);

  auto field_flag = [&](CLI::App* cmd) {
    cmd->add_option("--field", o.field, "q, fp:P or fpt:P")->capture_default_str();
  };
  auto output_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--pretty", o.pretty, "Indent JSON output");
    cmd->add_option("--output", o.output, "Write to a file instead of stdout");
  };

  std::vector<std::pair<std::string, CLI::App*>> invariants;
  for (const char* name : {"tol", "dupl", "gdisc", "disc"}) {
    CLI::App* cmd = app.add_subcommand(name, std::string("Compute ") + name + " of one polynomial");
    cmd->add_option("expression", o.expression, "Polynomial expression")->required();
    field_flag(cmd);
    output_flags(cmd);
    cmd->add_flag("--factored", o.factored, "Read the input as unit * (g1)^m1 * ...");
    if (std::string(name) == "tol") {
      cmd->add_option("--mode", o.mode, "Use the factorization formula: paper-separable, paper-general or corrected");
    }
    invariants.emplace_back(name, cmd);
  }

  CLI::App* report = app.add_subcommand("report", "Every invariant of one polynomial, as JSON");
  report->add_option("expression", o.expression, "Polynomial expression")->required();
  field_flag(report);
  output_flags(report);
  report->add_flag("--factored", o.factored, "Read the input as unit * (g1)^m1 * ...");
  report->add_flag("--assert-irreducible", o.assert_irreducible, "Treat the input as a single irreducible factor");

  CLI::App* check = app.add_subcommand("selfcheck", "Randomized cross-validation of all computation paths");
  field_flag(check);
  output_flags(check);
  check->add_option("--seed", o.seed)->capture_default_str();
  check->add_option("--count", o.count)->capture_default_str();
  check->add_option("--max-degree", o.max_degree)->capture_default_str();

  CLI::App* batch = app.add_subcommand("batch", "Report on every line of a file");
  batch->add_option("file", o.batch_file, "One expression per line, '#' comments, '@fp:7' field prefix")
      ->required()
      ->check(CLI::ExistingFile);
  field_flag(batch);
  output_flags(batch);
  batch->add_flag("--factored", o.factored, "Read each line as a factorization");
  batch->add_flag("--assert-irreducible", o.assert_irreducible, "Treat each line as a single irreducible factor");
  batch->add_option("--threads", o.threads, "Worker threads (0: one per core)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    for (const auto& [name, cmd] : invariants) {
      if (cmd->parsed()) return run_invariant(name, o);
    }
    if (report->parsed()) return run_report(o);
    if (check->parsed()) return run_selfcheck(o);
    if (batch->parsed()) return run_batch(o);
  } catch (const std::exception& e) {
    return input_error(app.get_subcommands().front()->get_name(), e);
  }
  return 0;
}
