#ifndef QCA_RULE_HPP
#define QCA_RULE_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "qca/configuration.hpp"
#include "qca/symbols.hpp"
#include "qca/tolerances.hpp"

namespace qca {

/// A local transition rule: for each neighborhood word w over qSigma it
/// assigns a normalized-or-not image vector delta|w> in C^{|qSigma|}.
///
/// Images are stored densely, one column per neighborhood word (indexed
/// by word_index), one row per target symbol.
class LocalRule {
 public:
  LocalRule(SymbolTable symbols, std::vector<int> neighborhood,
            Eigen::MatrixXcd images);

  const SymbolTable& symbols() const { return symbols_; }
  const std::vector<int>& neighborhood() const { return neighborhood_; }
  int neighborhood_size() const { return static_cast<int>(neighborhood_.size()); }
  int min_offset() const { return neighborhood_.front(); }
  int max_offset() const { return neighborhood_.back(); }

  /// Number of symbols including the quiescent one, |qSigma|.
  int symbol_count() const { return symbols_.size(); }
  std::size_t word_count() const {
    return static_cast<std::size_t>(images_.cols());
  }

  /// delta|w> as a column vector of amplitudes over target symbols.
  Eigen::VectorXcd image(const Word& w) const;
  Eigen::VectorXcd image_by_index(std::size_t word_idx) const;
  Complex amplitude(SymbolId target, const Word& w) const;

  const Eigen::MatrixXcd& images() const { return images_; }

  bool operator==(const LocalRule& other) const;

 private:
  SymbolTable symbols_;
  std::vector<int> neighborhood_;  // sorted, distinct offsets
  Eigen::MatrixXcd images_;        // symbol_count() x word_count()
};

/// Builds a rule from explicit images; throws std::invalid_argument on
/// dimension mismatch or a non-successive neighborhood.
LocalRule make_rule(SymbolTable symbols, std::vector<int> neighborhood,
                    Eigen::MatrixXcd images);

/// One amplitude of the transition table: <output|delta|word>.
struct RuleEntry {
  Word word;
  SymbolId output = kQuiescent;
  Complex amplitude;
};

/// Builds a rule from a sparse entry list; unlisted (word, output)
/// amplitudes are zero. Throws std::invalid_argument on wrong word
/// length, duplicate entries, or a non-successive neighborhood.
LocalRule make_rule(SymbolTable symbols, std::vector<int> neighborhood,
                    const std::vector<RuleEntry>& entries);

struct ValidationReport {
  bool quiescent_stable = false;
  bool normalized = false;
  /// Words whose image norm deviates from one by more than eps_norm.
  std::vector<Word> norm_offenders;
  /// For two-cell rules: whether every fully non-quiescent pair maps to
  /// a state with no quiescent component. Informational only.
  std::optional<bool> fully_stable;

  bool well_formed() const { return quiescent_stable && normalized; }
};

/// Checks <q|delta|q^n> = 1 and || delta|w> || = 1 for every word.
ValidationReport validate_rule(const LocalRule& rule, const Tolerances& tol);

/// Rescales every image to unit norm; throws std::domain_error if some
/// image is (numerically) zero.
LocalRule normalize_images(const LocalRule& rule, const Tolerances& tol);

/// The neighborhood word of cell `pos` in configuration `c`:
/// (c[pos + N_1], ..., c[pos + N_n]).
Word word_at(const Configuration& c, std::int64_t pos, const LocalRule& rule);

/// Cells whose neighborhood word can be non-quiescent when the input's
/// non-quiescent cells lie inside [k, l]: the interval
/// [k + min_offset, l + max_offset].
Interval extended_interval_domain(const LocalRule& rule, const Interval& idom);

/// Cells of the output that can actually become non-quiescent: cell i
/// reads position i + offset, so support [k - max_offset, l - min_offset].
Interval image_support(const LocalRule& rule, const Interval& idom);

}  // namespace qca

#endif  // QCA_RULE_HPP
