#ifndef QCA_DECISION_HPP
#define QCA_DECISION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qca/columns.hpp"
#include "qca/reduce.hpp"
#include "qca/rows.hpp"
#include "qca/rule.hpp"
#include "qca/tolerances.hpp"

namespace qca {

enum class Verdict {
  kUnitary,
  kNotUnitary,
  kInvalidRule,
  kIndeterminate,
};

std::string to_string(Verdict v);

/// Full trace of the decision pipeline:
/// validate -> reduce (n > 2) -> column test -> fast path or border
/// vectors + row test.
struct UnitarityReport {
  Verdict verdict = Verdict::kIndeterminate;

  ValidationReport validation;

  bool reduction_applied = false;
  std::optional<BlockEncoding> reduction;

  std::optional<ColumnDecision> columns;

  /// Set when the limit-free unit-rows check applied.
  std::optional<FastPathResult> fast_path;

  std::optional<BorderVectors> border;
  std::optional<BorderConditionReport> border_conditions;
  std::optional<bool> rows;
  /// (sum l)(sum r) when border vectors were computed, else the fast
  /// path left-hand side.
  std::optional<double> row_sum_product;
  /// |qSigma| of the rule the row test ran on.
  std::optional<double> row_sum_target;

  /// Stage name -> elapsed milliseconds, in pipeline order.
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// Decides unitarity of the global evolution. All failure modes are
/// verdicts: invalid rules yield kInvalidRule, a non-converging border
/// iteration yields kIndeterminate. Only resource guards (alphabet or
/// word-count caps) throw.
UnitarityReport decide_unitarity(const LocalRule& rule, const Tolerances& tol);

}  // namespace qca

#endif  // QCA_DECISION_HPP
