#ifndef QCA_COLUMNS_HPP
#define QCA_COLUMNS_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "qca/rule.hpp"
#include "qca/tolerances.hpp"

namespace qca {

/// Pairwise overlap transfer matrix for a two-cell rule.
///
/// Rows and columns are indexed by symbol pairs (a, b) -> a * m + b with
/// m = |qSigma|; values((x, x'), (y, y')) = |<delta|x'y'>, delta|xy>>|^2.
/// support holds values > eps_zero.
struct MMatrix {
  Eigen::MatrixXd values;
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> support;
  Eigen::Index pair_dim = 0;

  double at(SymbolId x, SymbolId xp, SymbolId y, SymbolId yp, int m) const {
    return values(static_cast<Eigen::Index>(x) * m + xp,
                  static_cast<Eigen::Index>(y) * m + yp);
  }
};

/// Alphabets with |qSigma| > 32 are rejected with std::length_error
/// (the matrix has |qSigma|^4 entries).
MMatrix build_m_matrix(const LocalRule& rule, const Tolerances& tol);

struct ColumnDecision {
  bool orthogonal = false;
  /// A symbol pair violating the reachability criterion, present when
  /// orthogonal is false.
  std::optional<std::pair<SymbolId, SymbolId>> witness;
  Eigen::Index steps = 0;  // the exponent s used
};

/// Decides pairwise orthogonality of the distinct columns of the global
/// evolution: with s = pair_dim - 1, the two-sided reachability product
/// <xx'|M^s|qq><qq|M^s|xx'> must be nonzero exactly when x = x'.
/// Nonzeroness is evaluated on the boolean support matrix (entries are
/// nonnegative, so no cancellation can occur in the numeric powers).
ColumnDecision columns_orthogonal(const LocalRule& rule, const Tolerances& tol);

/// || Delta|c> ||^2 for a basis configuration, by direct expansion.
double column_norm_squared(const Configuration& c, const LocalRule& rule,
                           const Tolerances& tol);

/// || Delta|c> || as the finite product of per-cell image norms
/// || delta|w_i(c)> || over the support window of c; factors outside the
/// window are one by quiescent stability. Works for non-normalized rules
/// (each non-unit factor simply enters the product).
double column_norm(const LocalRule& rule, const Configuration& c);

}  // namespace qca

#endif  // QCA_COLUMNS_HPP
