#ifndef QCA_ROWS_HPP
#define QCA_ROWS_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "qca/configuration.hpp"
#include "qca/rule.hpp"
#include "qca/tolerances.hpp"

namespace qca {

/// Transfer matrices of a two-cell rule: for each output symbol sigma,
/// by_symbol[sigma](x, y) = |<sigma|delta|xy>|^2. n() = by_symbol[q].
struct NMatrices {
  std::vector<Eigen::MatrixXd> by_symbol;

  const Eigen::MatrixXd& n() const { return by_symbol[kQuiescent]; }
  const Eigen::MatrixXd& of(SymbolId s) const {
    return by_symbol[static_cast<std::size_t>(s)];
  }
  Eigen::Index dim() const { return by_symbol.empty() ? 0 : n().rows(); }
};

NMatrices build_n_matrices(const LocalRule& rule);

/// Left and right border vectors: the limits of (N^T)^h|q> and N^h|q>.
///
/// Computed by monotone fixed-point iteration from the quiescent unit
/// vector; the iterates are componentwise nondecreasing, so the limit is
/// the minimal nonnegative fixed point with unit quiescent entry.
struct BorderVectors {
  Eigen::VectorXd l;
  Eigen::VectorXd r;
  int iterations = 0;
  /// max(||N r - r||_inf, ||N^T l - l||_inf) at the final iterate.
  double residual = 0.0;
  bool converged = false;
  /// Some entry exceeded |qSigma| + 1; the columns of the global
  /// evolution cannot have been orthonormal.
  bool diverged = false;

  double sum_l() const { return l.sum(); }
  double sum_r() const { return r.sum(); }
};

/// Requires orthonormal columns for the limits to stay finite; when the
/// iteration nonetheless diverges, the diverged flag is set and the
/// vectors hold the last iterate.
BorderVectors border_vectors(const NMatrices& nm, const Tolerances& tol);

/// The four structural facts about converged border vectors:
/// (i) l . r = 1; (ii) (sum l)(sum r) <= |qSigma|; (iii) every
/// non-quiescent x has l_x r_x = 0; (iv) N_xy > 0 for non-quiescent x, y
/// forces l_x = 0 or r_y = 0.
struct BorderConditionReport {
  bool inner_product_one = false;
  bool sum_product_bounded = false;
  bool disjoint_supports = false;
  bool no_crossing_edge = false;

  bool all() const {
    return inner_product_one && sum_product_bounded && disjoint_supports &&
           no_crossing_edge;
  }
};

BorderConditionReport check_border_conditions(const BorderVectors& bv,
                                              const NMatrices& nm,
                                              const Tolerances& tol);

/// True iff (sum l)(sum r) = |qSigma| within eps_sum.
bool rows_unit(const LocalRule& rule, const NMatrices& nm,
               const BorderVectors& bv, const Tolerances& tol);

/// Squared norm of the row of the global evolution indexed by
/// configuration r: l . (prod over idom of N^{(r_i)}) . r, and l . r for
/// the all-quiescent row.
double row_norm_squared(const LocalRule& rule, const NMatrices& nm,
                        const BorderVectors& bv, const Configuration& row);

struct FastPathResult {
  bool unit_rows = false;
  double lhs = 0.0;  // <q| N O N |q>
};

/// When every image of a fully non-quiescent pair has no quiescent
/// component, unit rows reduce to the limit-free check
/// <q| N O N |q> = |qSigma| with O the all-ones matrix. Returns absent
/// when that full-stability condition fails.
std::optional<FastPathResult> full_stability_fast_path(const LocalRule& rule,
                                                       const NMatrices& nm,
                                                       const Tolerances& tol);

}  // namespace qca

#endif  // QCA_ROWS_HPP
