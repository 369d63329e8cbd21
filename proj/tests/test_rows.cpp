#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qca/columns.hpp"
#include "qca/oracle.hpp"
#include "qca/rows.hpp"
#include "test_support.hpp"

using namespace qca;

namespace {

void check_matrix(const Eigen::MatrixXd& got, const Eigen::MatrixXd& want) {
  REQUIRE(got.rows() == want.rows());
  REQUIRE(got.cols() == want.cols());
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-12);
}

}  // namespace

TEST_CASE("transfer matrices of the flip rule") {
  const NMatrices nm = build_n_matrices(testing::qflip());
  REQUIRE(nm.by_symbol.size() == 2);

  Eigen::MatrixXd n(2, 2), np(2, 2);
  n << 1.0, 0.5, 0.0, 0.5;
  np << 0.0, 0.5, 1.0, 0.5;
  check_matrix(nm.n(), n);
  check_matrix(nm.of(1), np);

  // Images are unit vectors, so the per-word weights sum to one.
  check_matrix(nm.n() + nm.of(1), Eigen::MatrixXd::Ones(2, 2));
}

TEST_CASE("transfer matrices of the xor rules") {
  const NMatrices nm = build_n_matrices(testing::xor_rule());
  check_matrix(nm.n(), Eigen::MatrixXd::Identity(2, 2));
  Eigen::MatrixXd flip(2, 2);
  flip << 0.0, 1.0, 1.0, 0.0;
  check_matrix(nm.of(1), flip);

  const NMatrices nmp = build_n_matrices(testing::xorprime());
  Eigen::MatrixXd top(3, 3);
  top << 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0;
  check_matrix(nmp.n(), top);
}

TEST_CASE("border vectors of the shipped examples") {
  const Tolerances tol;

  const BorderVectors qf =
      border_vectors(build_n_matrices(testing::qflip()), tol);
  CHECK(qf.converged);
  CHECK(!qf.diverged);
  CHECK(qf.residual <= tol.eps_fix);
  CHECK(qf.l(0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(qf.l(1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(qf.r(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qf.r(1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(qf.sum_l() * qf.sum_r() == doctest::Approx(2.0).epsilon(1e-6));

  const BorderVectors x =
      border_vectors(build_n_matrices(testing::xor_rule()), tol);
  CHECK(x.converged);
  CHECK((x.l - Eigen::VectorXd::Unit(2, 0)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((x.r - Eigen::VectorXd::Unit(2, 0)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(x.sum_l() * x.sum_r() == doctest::Approx(1.0));

  const BorderVectors xp =
      border_vectors(build_n_matrices(testing::xorprime()), tol);
  CHECK(xp.converged);
  CHECK((xp.l - Eigen::VectorXd::Ones(3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((xp.r - Eigen::VectorXd::Unit(3, 0)).cwiseAbs().maxCoeff() < 1e-12);

  const BorderVectors id =
      border_vectors(build_n_matrices(testing::identity_rule()), tol);
  CHECK(id.converged);
  CHECK((id.l - Eigen::VectorXd::Ones(2)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((id.r - Eigen::VectorXd::Unit(2, 0)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("the collapsing rule drives the iteration past the bound") {
  const BorderVectors bv =
      border_vectors(build_n_matrices(testing::collapsing_rule()), Tolerances{});
  CHECK(bv.diverged);
  CHECK(!bv.converged);
}

TEST_CASE("iterates from the quiescent unit vector are nondecreasing") {
  std::mt19937_64 rng(43);
  SymbolTable table("q", {"p", "r"});
  for (int trial = 0; trial < 10; ++trial) {
    const NMatrices nm = build_n_matrices(random_rule(table, 2, rng));
    Eigen::VectorXd v = Eigen::VectorXd::Unit(3, 0);
    for (int h = 0; h < 12; ++h) {
      const Eigen::VectorXd next = nm.n() * v;
      CHECK((next - v).minCoeff() >= -1e-12);
      v = next;
      if (v.maxCoeff() > 64.0) break;
    }
  }
}

TEST_CASE("border conditions hold for the examples that pass the column test") {
  const Tolerances tol;
  for (const LocalRule& rule : {testing::qflip(), testing::xor_rule(),
                                testing::xorprime(), testing::identity_rule()}) {
    const NMatrices nm = build_n_matrices(rule);
    const BorderVectors bv = border_vectors(nm, tol);
    REQUIRE(bv.converged);
    const BorderConditionReport report = check_border_conditions(bv, nm, tol);
    CHECK(report.inner_product_one);
    CHECK(report.sum_product_bounded);
    CHECK(report.disjoint_supports);
    CHECK(report.no_crossing_edge);
  }
}

TEST_CASE("the row test separates the flip rule from plain xor") {
  const Tolerances tol;

  const NMatrices qf = build_n_matrices(testing::qflip());
  const BorderVectors qfb = border_vectors(qf, tol);
  CHECK(rows_unit(testing::qflip(), qf, qfb, tol));

  const NMatrices x = build_n_matrices(testing::xor_rule());
  const BorderVectors xb = border_vectors(x, tol);
  CHECK(!rows_unit(testing::xor_rule(), x, xb, tol));
}

TEST_CASE("row norms evaluate along the transfer product") {
  const Tolerances tol;
  const LocalRule qf = testing::qflip();
  const NMatrices nm = build_n_matrices(qf);
  const BorderVectors bv = border_vectors(nm, tol);

  CHECK(row_norm_squared(qf, nm, bv, Configuration::all_quiescent()) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(row_norm_squared(qf, nm, bv, Configuration::from_cells({{0, 1}})) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(row_norm_squared(qf, nm, bv,
                         Configuration::from_cells({{0, 1}, {2, 1}})) ==
        doctest::Approx(1.0).epsilon(1e-9));

  const LocalRule x = testing::xor_rule();
  const NMatrices xnm = build_n_matrices(x);
  const BorderVectors xbv = border_vectors(xnm, tol);
  CHECK(row_norm_squared(x, xnm, xbv, Configuration::from_cells({{0, 1}})) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("row norms of column-orthogonal rules never exceed one") {
  const Tolerances tol;
  std::mt19937_64 rng(47);
  std::vector<LocalRule> rules{testing::qflip(), testing::xorprime(),
                               testing::identity_rule(),
                               testing::shift_phase_rule(rng),
                               testing::shift_phase_rule(rng)};
  for (const LocalRule& rule : rules) {
    REQUIRE(columns_orthogonal(rule, tol).orthogonal);
    const NMatrices nm = build_n_matrices(rule);
    const BorderVectors bv = border_vectors(nm, tol);
    REQUIRE(bv.converged);
    for (int trial = 0; trial < 20; ++trial) {
      const Configuration row =
          testing::random_configuration(rng, -3, 3, rule.symbol_count());
      CHECK(row_norm_squared(rule, nm, bv, row) <= 1.0 + 1e-6);
    }
  }
}

TEST_CASE("border sums aggregate the single-cell row norms") {
  const Tolerances tol;
  std::mt19937_64 rng(53);
  std::vector<LocalRule> rules{testing::qflip(), testing::xor_rule(),
                               testing::xorprime(), testing::identity_rule(),
                               testing::shift_phase_rule(rng)};
  for (const LocalRule& rule : rules) {
    const NMatrices nm = build_n_matrices(rule);
    const BorderVectors bv = border_vectors(nm, tol);
    REQUIRE(bv.converged);
    double total = row_norm_squared(rule, nm, bv, Configuration::all_quiescent());
    for (SymbolId s = 1; s < rule.symbol_count(); ++s)
      total += row_norm_squared(rule, nm, bv, Configuration::from_cells({{0, s}}));
    CHECK(total == doctest::Approx(bv.sum_l() * bv.sum_r()).epsilon(1e-9));
  }
}

TEST_CASE("depth-limited row sums of the flip rule approach one") {
  const NMatrices nm = build_n_matrices(testing::qflip());
  Eigen::MatrixXd nh = Eigen::MatrixXd::Identity(2, 2);
  for (int h = 1; h <= 20; ++h) {
    nh = (nh * nm.n()).eval();
    const double value =
        (Eigen::RowVectorXd::Unit(2, 0) * nh * nm.of(1) * nh *
         Eigen::VectorXd::Unit(2, 0))
            .value();
    CHECK(value == doctest::Approx(1.0 - std::pow(2.0, -h)).epsilon(1e-12));
  }
}

TEST_CASE("full stability short-circuits the border computation") {
  const Tolerances tol;

  const auto xp = full_stability_fast_path(
      testing::xorprime(), build_n_matrices(testing::xorprime()), tol);
  REQUIRE(xp.has_value());
  CHECK(xp->unit_rows);
  CHECK(xp->lhs == doctest::Approx(3.0).epsilon(1e-9));

  CHECK(!full_stability_fast_path(testing::qflip(),
                                  build_n_matrices(testing::qflip()), tol)
             .has_value());
  CHECK(!full_stability_fast_path(testing::xor_rule(),
                                  build_n_matrices(testing::xor_rule()), tol)
             .has_value());

  std::mt19937_64 rng(59);
  const LocalRule shift = testing::shift_phase_rule(rng);
  const auto sp =
      full_stability_fast_path(shift, build_n_matrices(shift), tol);
  REQUIRE(sp.has_value());
  CHECK(sp->unit_rows);
  CHECK(sp->lhs == doctest::Approx(3.0).epsilon(1e-9));

  // Where the fast path applies it must agree with the border-vector route.
  const NMatrices nm = build_n_matrices(shift);
  const BorderVectors bv = border_vectors(nm, tol);
  REQUIRE(bv.converged);
  CHECK(rows_unit(shift, nm, bv, tol) == sp->unit_rows);
}
