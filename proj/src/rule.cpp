#include "qca/rule.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qca {
namespace {

// Word spaces beyond this are refused outright; every downstream
// structure is at least linear in the number of words.
constexpr std::size_t kWordCap = std::size_t{1} << 26;

void check_neighborhood(const std::vector<int>& n) {
  if (n.empty()) throw std::invalid_argument("neighborhood is empty");
  for (std::size_t i = 1; i < n.size(); ++i) {
    if (n[i] != n[i - 1] + 1)
      throw std::invalid_argument("neighborhood offsets must be successive");
  }
}

}  // namespace

LocalRule::LocalRule(SymbolTable symbols, std::vector<int> neighborhood,
                     Eigen::MatrixXcd images)
    : symbols_(std::move(symbols)),
      neighborhood_(std::move(neighborhood)),
      images_(std::move(images)) {
  check_neighborhood(neighborhood_);
  const std::size_t words = qca::word_count(
      static_cast<int>(neighborhood_.size()), symbols_.size(), kWordCap);
  if (images_.rows() != symbols_.size() ||
      static_cast<std::size_t>(images_.cols()) != words)
    throw std::invalid_argument("image matrix has wrong dimensions");
}

Eigen::VectorXcd LocalRule::image(const Word& w) const {
  if (static_cast<int>(w.size()) != neighborhood_size())
    throw std::invalid_argument("word length does not match neighborhood");
  return image_by_index(word_index(w, symbol_count()));
}

Eigen::VectorXcd LocalRule::image_by_index(std::size_t word_idx) const {
  return images_.col(static_cast<Eigen::Index>(word_idx));
}

Complex LocalRule::amplitude(SymbolId target, const Word& w) const {
  if (target < 0 || target >= symbol_count())
    throw std::out_of_range("target symbol out of range");
  return images_(target,
                 static_cast<Eigen::Index>(word_index(w, symbol_count())));
}

bool LocalRule::operator==(const LocalRule& other) const {
  return symbols_ == other.symbols_ && neighborhood_ == other.neighborhood_ &&
         images_ == other.images_;
}

LocalRule make_rule(SymbolTable symbols, std::vector<int> neighborhood,
                    Eigen::MatrixXcd images) {
  return LocalRule(std::move(symbols), std::move(neighborhood),
                   std::move(images));
}

LocalRule make_rule(SymbolTable symbols, std::vector<int> neighborhood,
                    const std::vector<RuleEntry>& entries) {
  check_neighborhood(neighborhood);
  const int m = symbols.size();
  const int n = static_cast<int>(neighborhood.size());
  const std::size_t words = word_count(n, m, kWordCap);
  Eigen::MatrixXcd images =
      Eigen::MatrixXcd::Zero(m, static_cast<Eigen::Index>(words));
  std::set<std::pair<std::size_t, SymbolId>> seen;
  for (const auto& e : entries) {
    if (static_cast<int>(e.word.size()) != n)
      throw std::invalid_argument("rule word has wrong length");
    if (e.output < 0 || e.output >= m)
      throw std::invalid_argument("rule output symbol out of range");
    const std::size_t idx = word_index(e.word, m);
    if (!seen.emplace(idx, e.output).second)
      throw std::invalid_argument("duplicate amplitude for (word, symbol)");
    images(e.output, static_cast<Eigen::Index>(idx)) = e.amplitude;
  }
  return LocalRule(std::move(symbols), std::move(neighborhood),
                   std::move(images));
}

ValidationReport validate_rule(const LocalRule& rule, const Tolerances& tol) {
  ValidationReport report;
  const int m = rule.symbol_count();
  const int n = rule.neighborhood_size();

  const Eigen::VectorXcd qimg = rule.image_by_index(0);  // word q^n has index 0
  report.quiescent_stable = std::abs(qimg(kQuiescent) - Complex{1.0, 0.0}) <=
                            tol.eps_norm;
  for (int s = 1; s < m && report.quiescent_stable; ++s) {
    if (std::abs(qimg(s)) > tol.eps_zero) report.quiescent_stable = false;
  }

  report.normalized = true;
  for (std::size_t idx = 0; idx < rule.word_count(); ++idx) {
    const double norm2 = rule.image_by_index(idx).squaredNorm();
    if (std::abs(norm2 - 1.0) > tol.eps_norm) {
      report.normalized = false;
      report.norm_offenders.push_back(
          word_from_index(idx, n, m));
    }
  }

  if (n == 2) {
    bool stable = true;
    for (SymbolId x = 1; x < m && stable; ++x) {
      for (SymbolId y = 1; y < m && stable; ++y) {
        if (std::abs(rule.amplitude(kQuiescent, Word{x, y})) > tol.eps_zero)
          stable = false;
      }
    }
    report.fully_stable = stable;
  }
  return report;
}

LocalRule normalize_images(const LocalRule& rule, const Tolerances& tol) {
  Eigen::MatrixXcd images = rule.images();
  for (Eigen::Index c = 0; c < images.cols(); ++c) {
    const double norm = images.col(c).norm();
    if (norm <= tol.eps_zero)
      throw std::domain_error("image of word " +
                              format_word(word_from_index(
                                              static_cast<std::size_t>(c),
                                              rule.neighborhood_size(),
                                              rule.symbol_count()),
                                          rule.symbols()) +
                              " is null");
    images.col(c) /= norm;
  }
  return LocalRule(rule.symbols(), rule.neighborhood(), std::move(images));
}

Word word_at(const Configuration& c, std::int64_t pos, const LocalRule& rule) {
  Word w;
  w.reserve(static_cast<std::size_t>(rule.neighborhood_size()));
  for (int offset : rule.neighborhood()) w.push_back(c.at(pos + offset));
  return w;
}

Interval extended_interval_domain(const LocalRule& rule, const Interval& idom) {
  if (idom.is_empty()) return Interval::empty();
  return Interval{idom.lo + rule.min_offset(), idom.hi + rule.max_offset()};
}

Interval image_support(const LocalRule& rule, const Interval& idom) {
  if (idom.is_empty()) return Interval::empty();
  return Interval{idom.lo - rule.max_offset(), idom.hi - rule.min_offset()};
}

}  // namespace qca
