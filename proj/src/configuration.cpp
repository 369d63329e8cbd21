#include "qca/configuration.hpp"

#include <cmath>
#include <sstream>

namespace qca {

Configuration Configuration::from_cells(
    std::initializer_list<std::pair<std::int64_t, SymbolId>> cells) {
  Configuration c;
  for (const auto& [pos, sym] : cells) c.set(pos, sym);
  return c;
}

void Configuration::set(std::int64_t pos, SymbolId sym) {
  if (sym == kQuiescent)
    cells_.erase(pos);
  else
    cells_[pos] = sym;
}

std::optional<Interval> interval_domain(const Configuration& c) {
  if (c.is_all_quiescent()) return std::nullopt;
  return Interval{c.cells().begin()->first, c.cells().rbegin()->first};
}

Configuration shifted(const Configuration& c, std::int64_t k) {
  Configuration out;
  for (const auto& [pos, sym] : c.cells()) out.set(pos + k, sym);
  return out;
}

std::string format_configuration(const Configuration& c,
                                 const SymbolTable& table) {
  if (c.is_all_quiescent()) return "(all quiescent)";
  std::ostringstream out;
  bool first = true;
  for (const auto& [pos, sym] : c.cells()) {
    if (!first) out << ',';
    first = false;
    out << pos << ':' << table.token(sym);
  }
  return out.str();
}

Superposition Superposition::basis(Configuration c) {
  Superposition s;
  s.terms_.emplace(std::move(c), Complex{1.0, 0.0});
  return s;
}

void Superposition::add(const Configuration& c, Complex amp) {
  if (amp == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(c, amp);
  if (!inserted) {
    it->second += amp;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

double Superposition::prune(double eps) {
  double dropped = 0.0;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= eps) {
      dropped += std::norm(it->second);
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return dropped;
}

double Superposition::norm_squared() const {
  double total = 0.0;
  for (const auto& [c, amp] : terms_) total += std::norm(amp);
  return total;
}

double Superposition::norm() const { return std::sqrt(norm_squared()); }

Complex Superposition::amplitude(const Configuration& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Complex{} : it->second;
}

Complex inner_product(const Superposition& a, const Superposition& b) {
  // Walk the smaller map, look up in the larger one.
  const Superposition& small = a.term_count() <= b.term_count() ? a : b;
  const Superposition& large = a.term_count() <= b.term_count() ? b : a;
  const bool small_is_a = &small == &a;
  Complex total{};
  for (const auto& [c, amp] : small.terms()) {
    Complex other = large.amplitude(c);
    if (other == Complex{}) continue;
    total += small_is_a ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return total;
}

Superposition scaled(const Superposition& s, Complex factor) {
  Superposition out;
  for (const auto& [c, amp] : s.terms()) out.add(c, amp * factor);
  return out;
}

Superposition sum(const Superposition& a, const Superposition& b) {
  Superposition out = a;
  for (const auto& [c, amp] : b.terms()) out.add(c, amp);
  return out;
}

}  // namespace qca
