#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qca/columns.hpp"
#include "qca/oracle.hpp"
#include "qca/simulate.hpp"
#include "test_support.hpp"

using namespace qca;

namespace {

// Reference evaluation of the two-sided reachability criterion on the
// numeric matrix powers; entries are nonnegative so supports only grow.
bool orthogonal_by_numeric_powers(const MMatrix& mm, int m) {
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(mm.pair_dim, mm.pair_dim);
  for (Eigen::Index step = 0; step + 1 < mm.pair_dim; ++step)
    power = (power * mm.values).eval();
  for (SymbolId x = 0; x < m; ++x)
    for (SymbolId xp = 0; xp < m; ++xp) {
      const Eigen::Index pair = static_cast<Eigen::Index>(x) * m + xp;
      const bool reachable = power(pair, 0) > 0.0 && power(0, pair) > 0.0;
      if (reachable != (x == xp)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("pair matrix of the flip rule") {
  const MMatrix mm = build_m_matrix(testing::qflip(), Tolerances{});
  REQUIRE(mm.pair_dim == 4);

  const double expected[4][4] = {
      {1.0, 0.5, 0.5, 1.0},
      {0.0, 0.5, 0.5, 0.0},
      {0.0, 0.5, 0.5, 0.0},
      {1.0, 0.5, 0.5, 1.0},
  };
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) {
      CHECK(mm.values(r, c) == doctest::Approx(expected[r][c]).epsilon(1e-12));
      CHECK(mm.support(r, c) == (expected[r][c] > 0.0));
    }
  CHECK(mm.at(0, 1, 1, 1, 2) == doctest::Approx(0.0));
}

TEST_CASE("the column test accepts the shipped unitary examples") {
  for (const LocalRule& rule : {testing::qflip(), testing::xor_rule(),
                                testing::xorprime(), testing::identity_rule()}) {
    const ColumnDecision d = columns_orthogonal(rule, Tolerances{});
    CHECK(d.orthogonal);
    CHECK(!d.witness.has_value());
    const Eigen::Index dim =
        static_cast<Eigen::Index>(rule.symbol_count()) * rule.symbol_count();
    CHECK(d.steps == dim - 1);
  }
}

TEST_CASE("the column test rejects the collapsing rule with a witness") {
  const ColumnDecision d =
      columns_orthogonal(testing::collapsing_rule(), Tolerances{});
  CHECK(!d.orthogonal);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->first != d.witness->second);
}

TEST_CASE("boolean reachability agrees with numeric matrix powers") {
  std::mt19937_64 rng(31);
  SymbolTable table("q", {"p"});
  std::vector<LocalRule> rules{testing::qflip(), testing::xor_rule(),
                               testing::collapsing_rule()};
  for (int trial = 0; trial < 10; ++trial)
    rules.push_back(random_rule(table, 2, rng));

  for (const LocalRule& rule : rules) {
    const MMatrix mm = build_m_matrix(rule, Tolerances{});
    const bool via_support = columns_orthogonal(rule, Tolerances{}).orthogonal;
    const bool via_numeric =
        orthogonal_by_numeric_powers(mm, rule.symbol_count());
    CHECK(via_support == via_numeric);
  }
}

TEST_CASE("the column test agrees with the brute-force check") {
  std::mt19937_64 rng(37);
  SymbolTable table("q", {"p"});
  const Interval window{0, 3};
  for (int trial = 0; trial < 30; ++trial) {
    const LocalRule rule = random_rule(table, 2, rng);
    const bool algebraic = columns_orthogonal(rule, Tolerances{}).orthogonal;
    const bool brute =
        oracle_columns_orthonormal(rule, window, Tolerances{}).orthonormal;
    CHECK(algebraic == brute);
  }
}

TEST_CASE("oversized alphabets are rejected, wide neighborhoods too") {
  std::vector<std::string> alphabet;
  for (int i = 1; i < 34; ++i) alphabet.push_back("s" + std::to_string(i));
  SymbolTable table("s0", std::move(alphabet));
  const int m = table.size();
  Eigen::MatrixXcd images =
      Eigen::MatrixXcd::Zero(m, static_cast<Eigen::Index>(m) * m);
  for (SymbolId x = 0; x < m; ++x)
    for (SymbolId y = 0; y < m; ++y)
      images(x, static_cast<Eigen::Index>(x) * m + y) = Complex{1.0, 0.0};
  const LocalRule wide = make_rule(table, {0, 1}, std::move(images));
  CHECK_THROWS_AS(build_m_matrix(wide, Tolerances{}), std::length_error);

  CHECK_THROWS_AS(columns_orthogonal(testing::sample_rule(), Tolerances{}),
                  std::invalid_argument);
}

TEST_CASE("column norms of the shipped examples are one") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Configuration c = testing::random_configuration(rng, -3, 3, 2);
    CHECK(column_norm_squared(c, testing::qflip(), Tolerances{}) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(column_norm(testing::qflip(), c) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(column_norm_squared(Configuration::from_cells({{0, 1}}),
                            testing::xor_rule(), Tolerances{}) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(column_norm(testing::xor_rule(), Configuration::from_cells({{0, 1}})) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("column norm is the product of local image norms") {
  CHECK(column_norm(testing::qflip(), Configuration{}) == 1.0);
  CHECK(column_norm(testing::sample_rule(), Configuration{}) == 1.0);

  // An unnormalized rule whose image of (q, p) has norm sqrt(2): the
  // single-p column picks up exactly the two factors sqrt(2) and 1.
  const SymbolTable table("q", {"p"});
  const LocalRule twofold = make_rule(table, {0, 1},
                                      std::vector<RuleEntry>{
                                          {{0, 0}, 0, {1.0, 0.0}},
                                          {{0, 1}, 0, {1.0, 0.0}},
                                          {{0, 1}, 1, {1.0, 0.0}},
                                          {{1, 0}, 1, {1.0, 0.0}},
                                          {{1, 1}, 1, {1.0, 0.0}},
                                      });
  CHECK(column_norm(twofold, Configuration::from_cells({{0, 1}})) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // Against the expansion-based squared norm, for arbitrary random rules.
  Tolerances exact;
  exact.eps_zero = 1e-300;
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    const LocalRule rule = random_rule(table, 2, rng);
    const Configuration c = testing::random_configuration(rng, -2, 2, 2);
    const double norm = column_norm(rule, c);
    CHECK(norm * norm ==
          doctest::Approx(column_norm_squared(c, rule, exact)).epsilon(1e-9));
  }
}

TEST_CASE("passing the column test makes distinct basis images orthogonal") {
  std::mt19937_64 rng(1234);
  std::vector<LocalRule> rules = {testing::qflip(), testing::xorprime(),
                                  testing::identity_rule(),
                                  testing::shift_phase_rule(rng)};
  for (const LocalRule& rule : rules) {
    REQUIRE(columns_orthogonal(rule, Tolerances{}).orthogonal);
    const int m = rule.symbol_count();
    for (int pair = 0; pair < 50; ++pair) {
      const Configuration a = testing::random_configuration(rng, 0, 4, m);
      Configuration b = testing::random_configuration(rng, 0, 4, m);
      while (b == a) b = testing::random_configuration(rng, 0, 4, m);
      const Complex overlap = inner_product(apply_global(b, rule, Tolerances{}),
                                            apply_global(a, rule, Tolerances{}));
      CHECK(std::abs(overlap) < 1e-9);
    }
  }
}
