#ifndef QCA_ORACLE_HPP
#define QCA_ORACLE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qca/configuration.hpp"
#include "qca/rule.hpp"
#include "qca/tolerances.hpp"

namespace qca {

inline constexpr std::size_t kOracleCap = std::size_t{1} << 20;

/// All |qSigma|^{|J|} configurations with idom inside J, in canonical
/// form; throws std::length_error when the count exceeds cap.
std::vector<Configuration> enumerate_configs(const Interval& J,
                                             const SymbolTable& table,
                                             std::size_t cap = kOracleCap);

/// The global evolution restricted to inputs with idom inside J,
/// materialized as a dense matrix over explicit bases.
struct FiniteEvolution {
  std::vector<Configuration> input_basis;
  std::vector<Configuration> output_basis;
  Eigen::MatrixXcd matrix;  // (r, c) = <output r | Delta | input c>
  /// Squared weight of simulator output falling outside output_basis;
  /// nonzero leakage indicates a bug, not an allowance.
  double leakage = 0.0;
};

FiniteEvolution finite_evolution(const LocalRule& rule, const Interval& J,
                                 const Tolerances& tol,
                                 std::size_t cap = kOracleCap);

struct OracleColumnsResult {
  bool orthonormal = false;
  /// Distinct input pair with non-vanishing overlap, or a single repeated
  /// input whose image norm is off.
  std::optional<std::pair<Configuration, Configuration>> witness;
};

/// Checks pairwise <Delta c'|Delta c> = [c = c'] by simulation over all
/// inputs with idom inside J.
OracleColumnsResult oracle_columns_orthonormal(const LocalRule& rule,
                                               const Interval& J,
                                               const Tolerances& tol,
                                               std::size_t cap = kOracleCap);

/// Depth-limited brute-force row sums: entry h' (0-based, h' <= depth)
/// is the sum of |<row|Delta|c>|^2 over configurations c with idom
/// inside [k - h', l + h' + 1], where [k, l] is the row's interval
/// domain ([0, 0] is used for the all-quiescent row).
///
/// Each overlap is the definitional product of local amplitudes; the
/// window is scanned cell by cell and branches whose running product is
/// exactly zero are skipped (only such branches — every configuration
/// with a nonzero overlap is visited individually). Visiting more than
/// cap search nodes throws std::length_error.
std::vector<double> oracle_row_norm(const LocalRule& rule,
                                    const Configuration& row, int depth,
                                    std::size_t cap = kOracleCap);

/// A quiescent-stable normalized rule with every other image an
/// independent uniformly random unit vector (normalized complex
/// Gaussian entries).
LocalRule random_rule(const SymbolTable& table, int neighborhood_size,
                      std::mt19937_64& rng);

}  // namespace qca

#endif  // QCA_ORACLE_HPP
