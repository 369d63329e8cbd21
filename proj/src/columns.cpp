#include "qca/columns.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qca/simulate.hpp"

namespace qca {
namespace {

// Square boolean matrix with bit-packed rows, sized for |qSigma| <= 32
// (dimension up to 1024).
class BoolMatrix {
 public:
  explicit BoolMatrix(Eigen::Index dim)
      : dim_(dim),
        words_per_row_((static_cast<std::size_t>(dim) + 63) / 64),
        bits_(static_cast<std::size_t>(dim) * words_per_row_, 0) {}

  static BoolMatrix identity(Eigen::Index dim) {
    BoolMatrix m(dim);
    for (Eigen::Index i = 0; i < dim; ++i) m.set(i, i);
    return m;
  }

  void set(Eigen::Index r, Eigen::Index c) {
    bits_[row_offset(r) + static_cast<std::size_t>(c) / 64] |=
        std::uint64_t{1} << (static_cast<std::size_t>(c) % 64);
  }

  bool get(Eigen::Index r, Eigen::Index c) const {
    return (bits_[row_offset(r) + static_cast<std::size_t>(c) / 64] >>
            (static_cast<std::size_t>(c) % 64)) &
           1;
  }

  BoolMatrix operator*(const BoolMatrix& other) const {
    BoolMatrix out(dim_);
    for (Eigen::Index r = 0; r < dim_; ++r) {
      for (Eigen::Index k = 0; k < dim_; ++k) {
        if (!get(r, k)) continue;
        const std::size_t src = other.row_offset(k);
        const std::size_t dst = out.row_offset(r);
        for (std::size_t w = 0; w < words_per_row_; ++w)
          out.bits_[dst + w] |= other.bits_[src + w];
      }
    }
    return out;
  }

  BoolMatrix pow(std::uint64_t e) const {
    BoolMatrix result = identity(dim_);
    BoolMatrix base = *this;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

 private:
  std::size_t row_offset(Eigen::Index r) const {
    return static_cast<std::size_t>(r) * words_per_row_;
  }

  Eigen::Index dim_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

void require_two_cells(const LocalRule& rule) {
  if (rule.neighborhood_size() != 2)
    throw std::invalid_argument(
        "column test needs a two-cell rule; reduce the neighborhood first");
}

}  // namespace

MMatrix build_m_matrix(const LocalRule& rule, const Tolerances& tol) {
  require_two_cells(rule);
  const int m = rule.symbol_count();
  if (m > 32)
    throw std::length_error(
        "alphabet too large for the pair matrix (|qSigma| > 32)");
  const Eigen::Index dim = static_cast<Eigen::Index>(m) * m;

  MMatrix out;
  out.pair_dim = dim;
  out.values.resize(dim, dim);
  out.support.resize(dim, dim);
  for (SymbolId x = 0; x < m; ++x)
    for (SymbolId xp = 0; xp < m; ++xp)
      for (SymbolId y = 0; y < m; ++y)
        for (SymbolId yp = 0; yp < m; ++yp) {
          const Complex overlap =
              rule.image(Word{xp, yp}).dot(rule.image(Word{x, y}));
          const double value = std::norm(overlap);
          const Eigen::Index row = static_cast<Eigen::Index>(x) * m + xp;
          const Eigen::Index col = static_cast<Eigen::Index>(y) * m + yp;
          out.values(row, col) = value;
          out.support(row, col) = value > tol.eps_zero;
        }
  return out;
}

ColumnDecision columns_orthogonal(const LocalRule& rule,
                                  const Tolerances& tol) {
  const MMatrix mm = build_m_matrix(rule, tol);
  const int m = rule.symbol_count();
  const Eigen::Index dim = mm.pair_dim;
  const Eigen::Index qq = 0;  // pair (q, q)

  BoolMatrix support(dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      if (mm.support(r, c)) support.set(r, c);

  const std::uint64_t s = static_cast<std::uint64_t>(dim) - 1;
  const BoolMatrix reach = support.pow(s);

  ColumnDecision decision;
  decision.steps = static_cast<Eigen::Index>(s);
  decision.orthogonal = true;
  for (SymbolId x = 0; x < m && decision.orthogonal; ++x)
    for (SymbolId xp = 0; xp < m && decision.orthogonal; ++xp) {
      const Eigen::Index pair = static_cast<Eigen::Index>(x) * m + xp;
      const bool nonzero = reach.get(pair, qq) && reach.get(qq, pair);
      if (nonzero != (x == xp)) {
        decision.orthogonal = false;
        decision.witness = std::make_pair(x, xp);
      }
    }
  return decision;
}

double column_norm_squared(const Configuration& c, const LocalRule& rule,
                           const Tolerances& tol) {
  return apply_global(c, rule, tol).norm_squared();
}

double column_norm(const LocalRule& rule, const Configuration& c) {
  const std::optional<Interval> idom = interval_domain(c);
  if (!idom) return 1.0;
  const Interval window = image_support(rule, *idom);
  double product = 1.0;
  for (std::int64_t i = window.lo; i <= window.hi; ++i)
    product *= rule.image(word_at(c, i, rule)).norm();
  return product;
}

}  // namespace qca
