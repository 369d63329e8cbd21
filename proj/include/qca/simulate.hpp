#ifndef QCA_SIMULATE_HPP
#define QCA_SIMULATE_HPP

#include <cstdint>

#include "qca/configuration.hpp"
#include "qca/rule.hpp"
#include "qca/tolerances.hpp"

namespace qca {

struct EvolutionStats {
  /// Squared weight discarded by pruning across the whole call.
  double pruned_weight = 0.0;
  /// Largest intermediate term count reached during expansion.
  std::size_t peak_terms = 0;
};

/// One step of the global evolution applied to a basis configuration:
/// the product state tensor_i delta|w_i(c)>, expanded cell by cell over
/// the cells that can become non-quiescent.
Superposition apply_global(const Configuration& c, const LocalRule& rule,
                           const Tolerances& tol,
                           EvolutionStats* stats = nullptr);

/// Extends apply_global linearly to superpositions.
Superposition apply_global(const Superposition& s, const LocalRule& rule,
                           const Tolerances& tol,
                           EvolutionStats* stats = nullptr);

/// `steps` iterations of apply_global on a basis configuration.
Superposition evolve(const Configuration& c, const LocalRule& rule, int steps,
                     const Tolerances& tol, EvolutionStats* stats = nullptr);

/// <target | Delta | source> computed directly as a product of local
/// amplitudes, without expanding the full image superposition.
Complex overlap_after_step(const Configuration& target,
                           const Configuration& source, const LocalRule& rule);

}  // namespace qca

#endif  // QCA_SIMULATE_HPP
