#include <doctest.h>

#include <json.hpp>
#include <random>
#include <vector>

#include "qca/decision.hpp"
#include "qca/oracle.hpp"
#include "qca/report_json.hpp"
#include "test_support.hpp"

using namespace qca;

namespace {

// Re-phases every image except the quiescent word's, which has to keep
// its unit amplitude for the rule to stay well formed.
LocalRule rephased(const LocalRule& rule, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  Eigen::MatrixXcd images = rule.images();
  for (Eigen::Index c = 1; c < images.cols(); ++c) {
    const double theta = angle(rng);
    images.col(c) *= Complex{std::cos(theta), std::sin(theta)};
  }
  return make_rule(rule.symbols(), rule.neighborhood(), std::move(images));
}

// Applies a permutation of the non-quiescent symbols to both the words
// and the images; perm[0] must be 0.
LocalRule relabeled(const LocalRule& rule, const std::vector<SymbolId>& perm) {
  const int m = rule.symbol_count();
  const int n = rule.neighborhood_size();
  Eigen::MatrixXcd images =
      Eigen::MatrixXcd::Zero(m, rule.images().cols());
  for (std::size_t idx = 0; idx < rule.word_count(); ++idx) {
    Word mapped = word_from_index(idx, n, m);
    for (SymbolId& s : mapped) s = perm[static_cast<std::size_t>(s)];
    const Eigen::VectorXcd image = rule.image_by_index(idx);
    const auto col = static_cast<Eigen::Index>(word_index(mapped, m));
    for (SymbolId s = 0; s < m; ++s)
      images(perm[static_cast<std::size_t>(s)], col) = image(s);
  }
  return make_rule(rule.symbols(), rule.neighborhood(), std::move(images));
}

}  // namespace

TEST_CASE("verdicts of the shipped examples") {
  const Tolerances tol;

  const UnitarityReport qf = decide_unitarity(testing::qflip(), tol);
  CHECK(qf.verdict == Verdict::kUnitary);
  CHECK(!qf.reduction_applied);
  REQUIRE(qf.columns.has_value());
  CHECK(qf.columns->orthogonal);
  CHECK(!qf.fast_path.has_value());
  REQUIRE(qf.border.has_value());
  REQUIRE(qf.row_sum_product.has_value());
  CHECK(*qf.row_sum_product == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(*qf.row_sum_target == doctest::Approx(2.0));
  REQUIRE(qf.border_conditions.has_value());
  CHECK(qf.border_conditions->all());

  const UnitarityReport x = decide_unitarity(testing::xor_rule(), tol);
  CHECK(x.verdict == Verdict::kNotUnitary);
  CHECK(x.columns->orthogonal);
  REQUIRE(x.rows.has_value());
  CHECK(!*x.rows);
  CHECK(*x.row_sum_product == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(*x.row_sum_target == doctest::Approx(2.0));

  const UnitarityReport xp = decide_unitarity(testing::xorprime(), tol);
  CHECK(xp.verdict == Verdict::kUnitary);
  REQUIRE(xp.fast_path.has_value());
  CHECK(xp.fast_path->unit_rows);
  CHECK(xp.fast_path->lhs == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(!xp.border.has_value());

  const UnitarityReport col = decide_unitarity(testing::collapsing_rule(), tol);
  CHECK(col.verdict == Verdict::kNotUnitary);
  CHECK(!col.columns->orthogonal);
  CHECK(!col.border.has_value());
}

TEST_CASE("wide neighborhoods go through the block reduction") {
  const Tolerances tol;
  const UnitarityReport report = decide_unitarity(testing::sample_rule(), tol);
  CHECK(report.verdict == Verdict::kNotUnitary);
  CHECK(report.reduction_applied);
  REQUIRE(report.reduction.has_value());
  CHECK(report.reduction->block_width == 2);
  CHECK(report.columns->orthogonal);
  REQUIRE(report.row_sum_product.has_value());
  CHECK(*report.row_sum_product == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(*report.row_sum_target == doctest::Approx(4.0));
}

TEST_CASE("deciding a rule and its explicit reduction agree") {
  const Tolerances tol;
  std::mt19937_64 rng(7);
  const SymbolTable table("q", {"p"});
  std::vector<LocalRule> rules = {testing::sample_rule()};
  for (int trial = 0; trial < 6; ++trial)
    rules.push_back(random_rule(table, 3, rng));
  for (const LocalRule& rule : rules) {
    const Verdict direct = decide_unitarity(rule, tol).verdict;
    const Verdict via_blocks =
        decide_unitarity(reduce_neighborhood(rule).rule, tol).verdict;
    CHECK(direct == via_blocks);
  }
}

TEST_CASE("ill-formed rules are rejected before any decision work") {
  const Tolerances tol;
  const LocalRule unstable =
      make_rule(SymbolTable("q", {"p"}), {0, 1},
                std::vector<RuleEntry>{{{0, 0}, 1, {1.0, 0.0}}});
  const UnitarityReport report = decide_unitarity(unstable, tol);
  CHECK(report.verdict == Verdict::kInvalidRule);
  CHECK(!report.validation.quiescent_stable);
  CHECK(!report.columns.has_value());
  CHECK(!report.border.has_value());
}

TEST_CASE("a starved iteration budget yields an open verdict") {
  Tolerances tol;
  tol.max_iter = 2;
  const UnitarityReport report = decide_unitarity(testing::qflip(), tol);
  CHECK(report.verdict == Verdict::kIndeterminate);
  REQUIRE(report.border.has_value());
  CHECK(!report.border->converged);
  CHECK(!report.border->diverged);
  CHECK(!report.rows.has_value());
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::kUnitary) == "UNITARY");
  CHECK(to_string(Verdict::kNotUnitary) == "NOT_UNITARY");
  CHECK(to_string(Verdict::kInvalidRule) == "INVALID_RULE");
  CHECK(to_string(Verdict::kIndeterminate) == "INDETERMINATE");
}

TEST_CASE("the verdict ignores image phases and symbol names") {
  const Tolerances tol;
  std::mt19937_64 rng(61);

  std::vector<LocalRule> rules{testing::qflip(), testing::xor_rule(),
                               testing::xorprime(), testing::collapsing_rule()};
  for (int trial = 0; trial < 10; ++trial)
    rules.push_back(random_rule(SymbolTable("q", {"p"}), 2, rng));

  for (const LocalRule& rule : rules) {
    const Verdict base = decide_unitarity(rule, tol).verdict;
    for (int round = 0; round < 3; ++round)
      CHECK(decide_unitarity(rephased(rule, rng), tol).verdict == base);
  }

  const std::vector<SymbolId> swap01{0, 2, 1};
  CHECK(decide_unitarity(relabeled(testing::xorprime(), swap01), tol).verdict ==
        Verdict::kUnitary);
  std::mt19937_64 rng3(67);
  SymbolTable three("q", {"a", "b"});
  for (int trial = 0; trial < 5; ++trial) {
    const LocalRule rule = random_rule(three, 2, rng3);
    CHECK(decide_unitarity(relabeled(rule, swap01), tol).verdict ==
          decide_unitarity(rule, tol).verdict);
  }
}

TEST_CASE("decision pipeline timings cover the executed stages") {
  const UnitarityReport report =
      decide_unitarity(testing::qflip(), Tolerances{});
  REQUIRE(!report.timings_ms.empty());
  CHECK(report.timings_ms.front().first == "validation");
  for (const auto& [name, ms] : report.timings_ms) {
    (void)name;
    CHECK(ms >= 0.0);
  }
}

TEST_CASE("reports serialize to the documented JSON layout") {
  const Tolerances tol;
  const UnitarityReport report = decide_unitarity(testing::qflip(), tol);
  const nlohmann::json j = report_to_json(report, testing::qflip(), tol);

  CHECK(j.at("verdict") == "UNITARY");
  CHECK(j.at("tolerances").at("eps_zero") == 1e-9);
  CHECK(j.at("timings_ms").is_object());

  bool saw_border = false;
  for (const auto& stage : j.at("stages")) {
    CHECK(stage.contains("name"));
    CHECK(stage.contains("pass"));
    CHECK(stage.contains("data"));
    if (stage.at("name") == "border_vectors") {
      saw_border = true;
      CHECK(stage.at("pass") == true);
      CHECK(stage.at("data").at("sum_l").get<double>() ==
            doctest::Approx(2.0).epsilon(1e-6));
      CHECK(stage.at("data").at("conditions").at("inner_product_one") == true);
    }
  }
  CHECK(saw_border);

  // Serialized numbers survive a round trip exactly.
  const nlohmann::json back = nlohmann::json::parse(j.dump());
  CHECK(back == j);
  CHECK(back.at("stages") == j.at("stages"));

  const nlohmann::json bad = report_to_json(
      decide_unitarity(testing::xor_rule(), tol), testing::xor_rule(), tol);
  CHECK(bad.at("verdict") == "NOT_UNITARY");
}
