#ifndef QCA_TOLERANCES_HPP
#define QCA_TOLERANCES_HPP

namespace qca {

/// Numeric thresholds shared by the algebraic checks.
///
/// eps_zero: magnitudes at or below this count as zero (supports, pruning).
/// eps_norm: allowed deviation of norms / inner products from their target.
/// eps_fix:  fixed-point iteration stops when the sup-norm update is below it.
/// eps_sum:  allowed deviation when comparing aggregate sums against targets.
struct Tolerances {
  double eps_zero = 1e-9;
  double eps_norm = 1e-9;
  double eps_fix = 1e-12;
  double eps_sum = 1e-6;
  int max_iter = 10000;
};

/// Defaults overridden by QCA_TOL_ZERO, QCA_TOL_NORM, QCA_TOL_FIX,
/// QCA_TOL_SUM and QCA_MAX_ITER when set in the environment.
Tolerances tolerances_from_env();

}  // namespace qca

#endif  // QCA_TOLERANCES_HPP
