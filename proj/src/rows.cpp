#include "qca/rows.hpp"

#include <cmath>
#include <stdexcept>

namespace qca {
namespace {

void require_two_cells(const LocalRule& rule) {
  if (rule.neighborhood_size() != 2)
    throw std::invalid_argument(
        "row analysis needs a two-cell rule; reduce the neighborhood first");
}

struct IterationResult {
  Eigen::VectorXd v;
  int iterations = 0;
  bool converged = false;
  bool diverged = false;
};

// Iterates v <- A v from the quiescent unit vector. The iterates are
// componentwise nondecreasing, so the limit is the minimal nonnegative
// fixed point with unit quiescent entry. Entries are bounded by
// |qSigma| when the orthonormal-columns hypothesis holds; beyond
// |qSigma| + 1 the iteration is flagged divergent.
IterationResult iterate_border(const Eigen::MatrixXd& A,
                               const Tolerances& tol) {
  const Eigen::Index dim = A.rows();
  IterationResult result;
  result.v = Eigen::VectorXd::Zero(dim);
  result.v(kQuiescent) = 1.0;
  const double bound = static_cast<double>(dim) + 1.0;
  for (int it = 0; it < tol.max_iter; ++it) {
    Eigen::VectorXd next = A * result.v;
    const double increment = (next - result.v).cwiseAbs().maxCoeff();
    result.v = std::move(next);
    result.iterations = it + 1;
    if (result.v.maxCoeff() > bound) {
      result.diverged = true;
      return result;
    }
    if (increment < tol.eps_fix) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

}  // namespace

NMatrices build_n_matrices(const LocalRule& rule) {
  require_two_cells(rule);
  const int m = rule.symbol_count();
  NMatrices nm;
  nm.by_symbol.assign(static_cast<std::size_t>(m),
                      Eigen::MatrixXd::Zero(m, m));
  for (SymbolId sigma = 0; sigma < m; ++sigma)
    for (SymbolId x = 0; x < m; ++x)
      for (SymbolId y = 0; y < m; ++y)
        nm.by_symbol[static_cast<std::size_t>(sigma)](x, y) =
            std::norm(rule.amplitude(sigma, Word{x, y}));
  return nm;
}

BorderVectors border_vectors(const NMatrices& nm, const Tolerances& tol) {
  const Eigen::MatrixXd& N = nm.n();
  const IterationResult right = iterate_border(N, tol);
  const IterationResult left = iterate_border(N.transpose(), tol);

  BorderVectors bv;
  bv.r = right.v;
  bv.l = left.v;
  bv.iterations = std::max(right.iterations, left.iterations);
  bv.converged = right.converged && left.converged;
  bv.diverged = right.diverged || left.diverged;
  bv.residual =
      std::max((N * bv.r - bv.r).cwiseAbs().maxCoeff(),
               (N.transpose() * bv.l - bv.l).cwiseAbs().maxCoeff());
  return bv;
}

BorderConditionReport check_border_conditions(const BorderVectors& bv,
                                              const NMatrices& nm,
                                              const Tolerances& tol) {
  const Eigen::Index dim = nm.dim();
  BorderConditionReport report;
  report.inner_product_one = std::abs(bv.l.dot(bv.r) - 1.0) <= tol.eps_sum;
  report.sum_product_bounded =
      bv.sum_l() * bv.sum_r() <= static_cast<double>(dim) + tol.eps_sum;
  report.disjoint_supports = true;
  for (Eigen::Index x = 1; x < dim; ++x)
    if (bv.l(x) * bv.r(x) >= tol.eps_zero) report.disjoint_supports = false;
  report.no_crossing_edge = true;
  for (Eigen::Index x = 1; x < dim; ++x)
    for (Eigen::Index y = 1; y < dim; ++y)
      if (nm.n()(x, y) > tol.eps_zero &&
          std::min(bv.l(x), bv.r(y)) >= tol.eps_zero)
        report.no_crossing_edge = false;
  return report;
}

bool rows_unit(const LocalRule& rule, const NMatrices&,
               const BorderVectors& bv, const Tolerances& tol) {
  const double target = static_cast<double>(rule.symbol_count());
  return std::abs(bv.sum_l() * bv.sum_r() - target) <= tol.eps_sum;
}

double row_norm_squared(const LocalRule& rule, const NMatrices& nm,
                        const BorderVectors& bv, const Configuration& row) {
  require_two_cells(rule);
  const auto idom = interval_domain(row);
  if (!idom) return bv.l.dot(bv.r);
  Eigen::RowVectorXd acc = bv.l.transpose();
  for (std::int64_t i = idom->lo; i <= idom->hi; ++i)
    acc = (acc * nm.of(row.at(i))).eval();
  return (acc * bv.r).value();
}

std::optional<FastPathResult> full_stability_fast_path(const LocalRule& rule,
                                                       const NMatrices& nm,
                                                       const Tolerances& tol) {
  require_two_cells(rule);
  const int m = rule.symbol_count();
  for (SymbolId x = 1; x < m; ++x)
    for (SymbolId y = 1; y < m; ++y)
      if (std::abs(rule.amplitude(kQuiescent, Word{x, y})) > tol.eps_zero)
        return std::nullopt;

  // <q| N O N |q> with O all ones: (sum of row q of N)(sum of column q).
  const Eigen::MatrixXd& N = nm.n();
  FastPathResult result;
  result.lhs = N.row(kQuiescent).sum() * N.col(kQuiescent).sum();
  result.unit_rows =
      std::abs(result.lhs - static_cast<double>(m)) <= tol.eps_sum;
  return result;
}

}  // namespace qca
