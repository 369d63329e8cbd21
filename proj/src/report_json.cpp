#include "qca/report_json.hpp"

namespace qca {
namespace {

using nlohmann::json;

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json stage(const std::string& name, bool pass, json data) {
  return json{{"name", name}, {"pass", pass}, {"data", std::move(data)}};
}

}  // namespace

json report_to_json(const UnitarityReport& report, const LocalRule& rule,
                    const Tolerances& tol) {
  json stages = json::array();

  {
    json data{{"quiescent_stable", report.validation.quiescent_stable},
              {"normalized", report.validation.normalized}};
    json offenders = json::array();
    for (const auto& w : report.validation.norm_offenders)
      offenders.push_back(format_word(w, rule.symbols()));
    data["norm_offenders"] = std::move(offenders);
    if (report.validation.fully_stable)
      data["fully_stable"] = *report.validation.fully_stable;
    stages.push_back(
        stage("validation", report.validation.well_formed(), std::move(data)));
  }

  {
    json data{{"applied", report.reduction_applied}};
    if (report.reduction) {
      data["block_width"] = report.reduction->block_width;
      data["shift"] = report.reduction->shift;
      data["block_symbols"] = report.reduction->target_table.size();
    }
    stages.push_back(stage("reduction", true, std::move(data)));
  }

  if (report.columns) {
    json data{{"s", report.columns->steps},
              {"orthogonal", report.columns->orthogonal}};
    if (report.columns->witness) {
      const auto& table =
          report.reduction ? report.reduction->target_table : rule.symbols();
      data["witness"] = json::array({table.token(report.columns->witness->first),
                                     table.token(
                                         report.columns->witness->second)});
    }
    stages.push_back(
        stage("columns", report.columns->orthogonal, std::move(data)));
  }

  if (report.fast_path) {
    json data{{"applicable", true},
              {"lhs", report.fast_path->lhs},
              {"target", report.row_sum_target ? *report.row_sum_target : 0.0}};
    stages.push_back(
        stage("full_stability", report.fast_path->unit_rows, std::move(data)));
  } else if (report.columns && report.columns->orthogonal) {
    stages.push_back(
        stage("full_stability", true, json{{"applicable", false}}));
  }

  if (report.border) {
    json data{{"iterations", report.border->iterations},
              {"residual", report.border->residual},
              {"converged", report.border->converged},
              {"diverged", report.border->diverged},
              {"l", vector_to_json(report.border->l)},
              {"r", vector_to_json(report.border->r)},
              {"sum_l", report.border->sum_l()},
              {"sum_r", report.border->sum_r()}};
    if (report.border_conditions) {
      data["conditions"] =
          json{{"inner_product_one", report.border_conditions->inner_product_one},
               {"sum_product_bounded",
                report.border_conditions->sum_product_bounded},
               {"disjoint_supports",
                report.border_conditions->disjoint_supports},
               {"no_crossing_edge",
                report.border_conditions->no_crossing_edge}};
    }
    stages.push_back(stage("border_vectors",
                           report.border->converged && !report.border->diverged,
                           std::move(data)));
  }

  if (report.rows) {
    json data;
    if (report.row_sum_product) data["sum_product"] = *report.row_sum_product;
    if (report.row_sum_target) data["target"] = *report.row_sum_target;
    stages.push_back(stage("rows", *report.rows, std::move(data)));
  }

  json timings = json::object();
  for (const auto& [name, ms] : report.timings_ms) timings[name] = ms;

  return json{{"verdict", to_string(report.verdict)},
              {"stages", std::move(stages)},
              {"tolerances",
               {{"eps_zero", tol.eps_zero},
                {"eps_norm", tol.eps_norm},
                {"eps_fix", tol.eps_fix},
                {"eps_sum", tol.eps_sum},
                {"max_iter", tol.max_iter}}},
              {"timings_ms", std::move(timings)}};
}

}  // namespace qca
