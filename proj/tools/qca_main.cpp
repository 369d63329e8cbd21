#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qca/decision.hpp"
#include "qca/oracle.hpp"
#include "qca/reduce.hpp"
#include "qca/report_json.hpp"
#include "qca/rulefile.hpp"
#include "qca/simulate.hpp"
#include "qca/tolerances.hpp"

namespace {

using qca::Complex;
using qca::Configuration;
using qca::LocalRule;
using qca::Superposition;
using qca::Tolerances;
using qca::Verdict;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LocalRule load_rule(const std::string& path) {
  return qca::parse_rule_file(read_file(path));
}

void add_tolerance_flags(CLI::App* cmd, Tolerances* tol) {
  cmd->add_option("--eps-zero", tol->eps_zero, "zero threshold");
  cmd->add_option("--eps-norm", tol->eps_norm, "normalization tolerance");
  cmd->add_option("--eps-fix", tol->eps_fix, "fixed-point increment bound");
  cmd->add_option("--eps-sum", tol->eps_sum, "border-sum tolerance");
  cmd->add_option("--max-iter", tol->max_iter, "fixed-point iteration cap");
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::kUnitary:
      return 0;
    case Verdict::kNotUnitary:
      return 2;
    case Verdict::kInvalidRule:
      return 3;
    case Verdict::kIndeterminate:
      return 4;
  }
  return 4;
}

Configuration parse_state(const std::string& text, const qca::SymbolTable& table) {
  Configuration c;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("state item needs pos:symbol: " + item);
    const std::int64_t pos = std::stoll(item.substr(0, colon));
    c.set(pos, table.require(item.substr(colon + 1)));
    start = end + 1;
  }
  return c;
}

std::string format_amplitude(Complex a) {
  char buffer[80];
  if (a.imag() == 0.0)
    std::snprintf(buffer, sizeof(buffer), "%.12g", a.real());
  else
    std::snprintf(buffer, sizeof(buffer), "%.12g%+.12gi", a.real(), a.imag());
  return buffer;
}

int run_check(const std::string& path, bool as_json, const Tolerances& tol) {
  const LocalRule rule = load_rule(path);
  const qca::UnitarityReport report = qca::decide_unitarity(rule, tol);
  if (as_json) {
    std::cout << qca::report_to_json(report, rule, tol).dump(2) << '\n';
  } else {
    std::cout << "verdict: " << qca::to_string(report.verdict) << '\n';
    if (report.columns)
      std::cout << "columns orthogonal: "
                << (report.columns->orthogonal ? "true" : "false") << '\n';
    if (report.fast_path)
      std::cout << "full stability fast path: <q|NON|q> = "
                << report.fast_path->lhs << '\n';
    if (report.row_sum_product && report.row_sum_target)
      std::cout << "row sum product: " << *report.row_sum_product << " vs |qS| = "
                << *report.row_sum_target << '\n';
  }
  return verdict_exit_code(report.verdict);
}

int run_simulate(const std::string& path, const std::string& state, int steps,
                 bool as_json, const Tolerances& tol) {
  const LocalRule rule = load_rule(path);
  const Configuration start = parse_state(state, rule.symbols());
  qca::EvolutionStats stats;
  const Superposition result = qca::evolve(start, rule, steps, tol, &stats);
  if (as_json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [cfg, amp] : result.terms())
      terms.push_back({{"state", qca::format_configuration(cfg, rule.symbols())},
                       {"re", amp.real()},
                       {"im", amp.imag()}});
    std::cout << nlohmann::json{{"terms", std::move(terms)},
                                {"norm_squared", result.norm_squared()},
                                {"pruned_weight", stats.pruned_weight}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& [cfg, amp] : result.terms())
      std::cout << format_amplitude(amp) << "  "
                << qca::format_configuration(cfg, rule.symbols()) << '\n';
    std::cout << "norm^2 = " << result.norm_squared() << '\n';
  }
  return 0;
}

int run_oracle(const std::string& path, std::int64_t lo, std::int64_t hi,
               bool as_json, const Tolerances& tol) {
  const LocalRule rule = load_rule(path);
  const auto result =
      qca::oracle_columns_orthonormal(rule, qca::Interval{lo, hi}, tol);
  if (as_json) {
    nlohmann::json out{{"columns_orthonormal", result.orthonormal}};
    if (result.witness)
      out["witness"] = nlohmann::json::array(
          {qca::format_configuration(result.witness->first, rule.symbols()),
           qca::format_configuration(result.witness->second, rule.symbols())});
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "columns orthonormal: "
              << (result.orthonormal ? "true" : "false") << '\n';
    if (result.witness)
      std::cout << "witness: "
                << qca::format_configuration(result.witness->first,
                                             rule.symbols())
                << " / "
                << qca::format_configuration(result.witness->second,
                                             rule.symbols())
                << '\n';
  }
  return 0;
}

int run_reduce(const std::string& path, const std::string& out_path) {
  const LocalRule rule = load_rule(path);
  const qca::ReducedRule reduced = qca::reduce_neighborhood(rule);
  std::ostringstream out;
  out << "# reduced from a " << rule.neighborhood_size()
      << "-cell neighborhood; block width " << reduced.encoding.block_width
      << ", shift " << reduced.encoding.shift << '\n';
  out << qca::print_rule_file(reduced.rule);
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    file << out.str();
  }
  return 0;
}

int run_examples(const std::string& name) {
  if (name.empty()) {
    for (const auto& n : qca::builtin_example_names()) std::cout << n << '\n';
    return 0;
  }
  std::cout << qca::builtin_example(name);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unitarity verifier and simulator for one-dimensional "
               "quantum cellular automata"};
  app.require_subcommand(1);

  Tolerances tol;
  try {
    tol = qca::tolerances_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::string rule_path;
  bool as_json = false;

  CLI::App* check = app.add_subcommand("check", "decide unitarity");
  check->add_option("rulefile", rule_path)->required();
  check->add_flag("--json", as_json, "machine-readable report");
  add_tolerance_flags(check, &tol);

  std::string state;
  int steps = 1;
  CLI::App* simulate =
      app.add_subcommand("simulate", "apply the global evolution");
  simulate->add_option("rulefile", rule_path)->required();
  simulate->add_option("--state", state, "pos:symbol,... (empty = quiescent)");
  simulate->add_option("--steps", steps, "number of steps");
  simulate->add_flag("--json", as_json, "machine-readable output");
  add_tolerance_flags(simulate, &tol);

  std::vector<std::int64_t> interval{0, 3};
  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force column check on an interval");
  oracle->add_option("rulefile", rule_path)->required();
  oracle->add_option("--interval", interval, "lo hi")->expected(2);
  oracle->add_flag("--json", as_json, "machine-readable output");
  add_tolerance_flags(oracle, &tol);

  std::string out_path;
  CLI::App* reduce =
      app.add_subcommand("reduce", "rewrite to a two-cell neighborhood");
  reduce->add_option("rulefile", rule_path)->required();
  reduce->add_option("--out", out_path, "output path (default stdout)");

  std::string example_name;
  CLI::App* examples =
      app.add_subcommand("examples", "print a shipped rule file");
  examples->add_option("name", example_name);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) return run_check(rule_path, as_json, tol);
    if (app.got_subcommand(simulate))
      return run_simulate(rule_path, state, steps, as_json, tol);
    if (app.got_subcommand(oracle))
      return run_oracle(rule_path, interval[0], interval[1], as_json, tol);
    if (app.got_subcommand(reduce)) return run_reduce(rule_path, out_path);
    if (app.got_subcommand(examples)) return run_examples(example_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
