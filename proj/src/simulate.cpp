#include "qca/simulate.hpp"

#include <algorithm>
#include <cmath>

namespace qca {
namespace {

void track_peak(EvolutionStats* stats, std::size_t terms) {
  if (stats && terms > stats->peak_terms) stats->peak_terms = terms;
}

}  // namespace

Superposition apply_global(const Configuration& c, const LocalRule& rule,
                           const Tolerances& tol, EvolutionStats* stats) {
  const auto idom = interval_domain(c);
  if (!idom) return Superposition::basis(Configuration::all_quiescent());
  const Interval support = image_support(rule, *idom);

  // Expand cell by cell over the cells that can leave quiescence; all
  // other cells contribute the factor <q|delta|q^n> = 1.
  Superposition partial = Superposition::basis(Configuration::all_quiescent());
  for (std::int64_t i = support.lo; i <= support.hi; ++i) {
    const Eigen::VectorXcd factor = rule.image(word_at(c, i, rule));
    Superposition next;
    for (const auto& [cfg, amp] : partial.terms()) {
      for (SymbolId s = 0; s < rule.symbol_count(); ++s) {
        const Complex a = factor(s);
        if (a == Complex{}) continue;
        Configuration extended = cfg;
        extended.set(i, s);
        next.add(extended, amp * a);
      }
    }
    if (stats) stats->pruned_weight += next.prune(tol.eps_zero);
    track_peak(stats, next.term_count());
    partial = std::move(next);
  }
  return partial;
}

Superposition apply_global(const Superposition& s, const LocalRule& rule,
                           const Tolerances& tol, EvolutionStats* stats) {
  Superposition out;
  for (const auto& [cfg, amp] : s.terms()) {
    const Superposition image = apply_global(cfg, rule, tol, stats);
    for (const auto& [img, a] : image.terms()) out.add(img, amp * a);
  }
  if (stats) stats->pruned_weight += out.prune(tol.eps_zero);
  track_peak(stats, out.term_count());
  return out;
}

Superposition evolve(const Configuration& c, const LocalRule& rule, int steps,
                     const Tolerances& tol, EvolutionStats* stats) {
  Superposition state = Superposition::basis(c);
  for (int k = 0; k < steps; ++k) state = apply_global(state, rule, tol, stats);
  return state;
}

Complex overlap_after_step(const Configuration& target,
                           const Configuration& source, const LocalRule& rule) {
  // <target|Delta|source> = prod over cells of <target_i|delta|word_i>;
  // outside the range below every factor is <q|delta|q^n> = 1 for a
  // quiescent-stable rule.
  const auto sdom = interval_domain(source);
  const auto tdom = interval_domain(target);
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  if (sdom) {
    const Interval s = image_support(rule, *sdom);
    lo = s.lo;
    hi = s.hi;
  }
  if (tdom) {
    lo = sdom ? std::min(lo, tdom->lo) : tdom->lo;
    hi = sdom ? std::max(hi, tdom->hi) : tdom->hi;
  }
  Complex product{1.0, 0.0};
  for (std::int64_t i = lo; i <= hi && product != Complex{}; ++i)
    product *= rule.amplitude(target.at(i), word_at(source, i, rule));
  return product;
}

}  // namespace qca
