#include "qca/decision.hpp"

#include <chrono>

namespace qca {
namespace {

class StageClock {
 public:
  explicit StageClock(UnitarityReport* report) : report_(report) {}

  void finish(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - mark_).count();
    report_->timings_ms.emplace_back(name, ms);
    mark_ = now;
  }

 private:
  UnitarityReport* report_;
  std::chrono::steady_clock::time_point mark_ =
      std::chrono::steady_clock::now();
};

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kUnitary:
      return "UNITARY";
    case Verdict::kNotUnitary:
      return "NOT_UNITARY";
    case Verdict::kInvalidRule:
      return "INVALID_RULE";
    case Verdict::kIndeterminate:
      return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

UnitarityReport decide_unitarity(const LocalRule& rule, const Tolerances& tol) {
  UnitarityReport report;
  StageClock clock(&report);

  report.validation = validate_rule(rule, tol);
  clock.finish("validation");
  if (!report.validation.well_formed()) {
    report.verdict = Verdict::kInvalidRule;
    return report;
  }

  // Normalized images make every column of the global evolution unit
  // norm, so unitarity reduces to orthogonal columns plus unit rows.
  ReducedRule reduced = reduce_neighborhood(rule);
  report.reduction_applied = rule.neighborhood_size() != 2;
  if (report.reduction_applied || reduced.encoding.shift != 0)
    report.reduction = reduced.encoding;
  const LocalRule& working = reduced.rule;
  clock.finish("reduction");

  report.columns = columns_orthogonal(working, tol);
  clock.finish("columns");
  if (!report.columns->orthogonal) {
    report.verdict = Verdict::kNotUnitary;
    return report;
  }

  const NMatrices nm = build_n_matrices(working);
  report.fast_path = full_stability_fast_path(working, nm, tol);
  clock.finish("full_stability");
  report.row_sum_target = static_cast<double>(working.symbol_count());

  if (report.fast_path) {
    report.rows = report.fast_path->unit_rows;
    report.row_sum_product = report.fast_path->lhs;
    report.verdict =
        *report.rows ? Verdict::kUnitary : Verdict::kNotUnitary;
    return report;
  }

  report.border = border_vectors(nm, tol);
  clock.finish("border_vectors");
  if (!report.border->converged || report.border->diverged) {
    report.verdict = Verdict::kIndeterminate;
    return report;
  }
  report.border_conditions = check_border_conditions(*report.border, nm, tol);

  const bool unit = rows_unit(working, nm, *report.border, tol);
  report.rows = unit;
  report.row_sum_product = report.border->sum_l() * report.border->sum_r();
  report.verdict = unit ? Verdict::kUnitary : Verdict::kNotUnitary;
  clock.finish("rows");
  return report;
}

}  // namespace qca
