#ifndef QCA_REDUCE_HPP
#define QCA_REDUCE_HPP

#include <Eigen/Dense>
#include <optional>

#include "qca/configuration.hpp"
#include "qca/rule.hpp"
#include "qca/symbols.hpp"

namespace qca {

/// The overlap tensor of a contiguous rule with neighborhood size n:
/// for words x, y of length n - 1 that overlap on n - 2 symbols
/// (x_2..x_{n-1} = y_1..y_{n-2}), the image delta|x . y_{n-1}>.
///
/// Conventionally printed as a matrix with one row per y and one column
/// per x; entry(row, col) follows that layout while image(prefix, suffix)
/// names the operands directly.
class ATensor {
 public:
  explicit ATensor(LocalRule rule);

  int word_length() const { return word_length_; }
  std::size_t word_dim() const { return word_dim_; }

  bool compatible(std::size_t prefix_idx, std::size_t suffix_idx) const;

  /// delta|prefix . last(suffix)> when the words overlap; nullopt otherwise.
  std::optional<Eigen::VectorXcd> image(std::size_t prefix_idx,
                                        std::size_t suffix_idx) const;

  /// Matrix-position accessor: entry(row, col) = image(col, row).
  std::optional<Eigen::VectorXcd> entry(std::size_t row_idx,
                                        std::size_t col_idx) const {
    return image(col_idx, row_idx);
  }

 private:
  LocalRule rule_;
  int word_length_;       // n - 1
  std::size_t word_dim_;  // |qSigma|^(n-1)
  int base_;
};

ATensor build_a_tensor(const LocalRule& rule);

/// How configurations over the original alphabet map onto the block
/// alphabet of a reduced rule.
struct BlockEncoding {
  int block_width = 1;      // n - 1 source cells per target cell
  SymbolTable source_table; // original symbols
  SymbolTable target_table; // block symbols, quiescent block first
  int shift = 0;            // offset subtracted to normalize the neighborhood
};

struct ReducedRule {
  LocalRule rule;
  BlockEncoding encoding;
};

/// Rewrites an n-cell contiguous-neighborhood rule (n >= 2, offsets
/// normalized to 0..n-1 first) as a two-cell rule over blocks of width
/// n - 1, so that the two-cell decision procedure applies. For n = 2 the
/// rule is returned unchanged apart from the shift normalization.
ReducedRule reduce_neighborhood(const LocalRule& rule);

/// Packs a configuration into block cells; block j covers source cells
/// [width * j, width * j + width - 1].
Configuration encode_configuration(const Configuration& c,
                                   const BlockEncoding& enc);

/// Inverse of encode_configuration.
Configuration decode_configuration(const Configuration& c,
                                   const BlockEncoding& enc);

}  // namespace qca

#endif  // QCA_REDUCE_HPP
