#ifndef QCA_CONFIGURATION_HPP
#define QCA_CONFIGURATION_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qca/symbols.hpp"

namespace qca {

using Complex = std::complex<double>;

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  static Interval empty() { return Interval{0, -1}; }

  bool is_empty() const { return lo > hi; }
  std::int64_t length() const { return is_empty() ? 0 : hi - lo + 1; }
  bool contains(std::int64_t i) const { return lo <= i && i <= hi; }

  bool operator==(const Interval& o) const {
    if (is_empty() && o.is_empty()) return true;
    return lo == o.lo && hi == o.hi;
  }
  bool operator!=(const Interval& o) const { return !(*this == o); }
};

/// A finite configuration: a cell assignment over Z with non-quiescent
/// symbols on finitely many positions.
///
/// Stored canonically: only non-quiescent cells are present, so map
/// equality is configuration equality and the all-quiescent
/// configuration is the empty map.
class Configuration {
 public:
  Configuration() = default;

  static Configuration all_quiescent() { return Configuration(); }
  static Configuration from_cells(
      std::initializer_list<std::pair<std::int64_t, SymbolId>> cells);

  SymbolId at(std::int64_t pos) const {
    auto it = cells_.find(pos);
    return it == cells_.end() ? kQuiescent : it->second;
  }

  /// Assigns a cell; assigning the quiescent symbol erases the entry.
  void set(std::int64_t pos, SymbolId sym);

  bool is_all_quiescent() const { return cells_.empty(); }
  std::size_t support_size() const { return cells_.size(); }

  const std::map<std::int64_t, SymbolId>& cells() const { return cells_; }

  bool operator==(const Configuration& o) const { return cells_ == o.cells_; }
  bool operator!=(const Configuration& o) const { return !(*this == o); }
  bool operator<(const Configuration& o) const { return cells_ < o.cells_; }

 private:
  std::map<std::int64_t, SymbolId> cells_;
};

/// idom(c): the smallest interval containing every non-quiescent cell;
/// absent for the all-quiescent configuration.
std::optional<Interval> interval_domain(const Configuration& c);

/// Shifts every cell k positions to the right.
Configuration shifted(const Configuration& c, std::int64_t k);

/// "pos:sym,pos:sym" rendering; "(all quiescent)" for the empty map.
std::string format_configuration(const Configuration& c,
                                 const SymbolTable& table);

/// A finite complex-weighted combination of configurations.
///
/// Terms with amplitude exactly zero are dropped on insertion; callers
/// that need tolerance-based pruning use prune().
class Superposition {
 public:
  Superposition() = default;

  static Superposition basis(Configuration c);

  /// Accumulates amp onto the configuration's amplitude.
  void add(const Configuration& c, Complex amp);

  /// Drops terms with |amplitude| <= eps; returns the squared weight dropped.
  double prune(double eps);

  double norm_squared() const;
  double norm() const;
  std::size_t term_count() const { return terms_.size(); }

  Complex amplitude(const Configuration& c) const;

  const std::map<Configuration, Complex>& terms() const { return terms_; }

  bool operator==(const Superposition& o) const { return terms_ == o.terms_; }

 private:
  std::map<Configuration, Complex> terms_;
};

/// <a|b> = sum over configurations of conj(a_c) * b_c.
Complex inner_product(const Superposition& a, const Superposition& b);

Superposition scaled(const Superposition& s, Complex factor);
Superposition sum(const Superposition& a, const Superposition& b);

}  // namespace qca

#endif  // QCA_CONFIGURATION_HPP
