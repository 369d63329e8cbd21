#include "qca/reduce.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qca {
namespace {

// Block symbol spelling: plain concatenation when every source token is
// a single character, '.'-joined otherwise. Tokens stay free of
// whitespace and of the configuration separators ':' and ','.
std::string block_token(const Word& w, const SymbolTable& source) {
  bool single_chars = true;
  for (SymbolId s : w)
    if (source.token(s).size() != 1) single_chars = false;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single_chars) out += '.';
    out += source.token(w[i]);
  }
  return out;
}

LocalRule shift_normalized(const LocalRule& rule) {
  std::vector<int> neighborhood(
      static_cast<std::size_t>(rule.neighborhood_size()));
  for (std::size_t i = 0; i < neighborhood.size(); ++i)
    neighborhood[i] = static_cast<int>(i);
  return LocalRule(rule.symbols(), std::move(neighborhood), rule.images());
}

// A one-cell rule reads a single position; the equivalent two-cell rule
// ignores its second cell.
LocalRule pad_to_two_cells(const LocalRule& rule) {
  const int m = rule.symbol_count();
  Eigen::MatrixXcd images(m, static_cast<Eigen::Index>(m) * m);
  for (SymbolId x = 0; x < m; ++x)
    for (SymbolId y = 0; y < m; ++y)
      images.col(static_cast<Eigen::Index>(x) * m + y) = rule.image(Word{x});
  return LocalRule(rule.symbols(), {0, 1}, std::move(images));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t quot = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --quot;
  return quot;
}

}  // namespace

ATensor::ATensor(LocalRule rule)
    : rule_(std::move(rule)),
      word_length_(rule_.neighborhood_size() - 1),
      base_(rule_.symbol_count()) {
  if (rule_.neighborhood_size() < 2)
    throw std::invalid_argument("overlap tensor needs at least two cells");
  word_dim_ = word_count(word_length_, base_, std::size_t{1} << 26);
}

bool ATensor::compatible(std::size_t prefix_idx, std::size_t suffix_idx) const {
  if (prefix_idx >= word_dim_ || suffix_idx >= word_dim_)
    throw std::out_of_range("word index outside tensor");
  // prefix with its first symbol dropped vs suffix with its last one
  // dropped; for one-symbol words both sides are the empty word.
  const std::size_t tail_dim = word_dim_ / static_cast<std::size_t>(base_);
  return prefix_idx % tail_dim ==
         suffix_idx / static_cast<std::size_t>(base_);
}

std::optional<Eigen::VectorXcd> ATensor::image(std::size_t prefix_idx,
                                               std::size_t suffix_idx) const {
  if (!compatible(prefix_idx, suffix_idx)) return std::nullopt;
  const std::size_t glued = prefix_idx * static_cast<std::size_t>(base_) +
                            suffix_idx % static_cast<std::size_t>(base_);
  return rule_.image_by_index(glued);
}

ATensor build_a_tensor(const LocalRule& rule) { return ATensor(rule); }

ReducedRule reduce_neighborhood(const LocalRule& rule) {
  const int shift = rule.min_offset();
  const LocalRule normalized = shift_normalized(rule);
  const int n = normalized.neighborhood_size();
  const int m = normalized.symbol_count();

  if (n == 1)
    return ReducedRule{pad_to_two_cells(normalized),
                       BlockEncoding{1, rule.symbols(), rule.symbols(), shift}};
  if (n == 2)
    return ReducedRule{normalized,
                       BlockEncoding{1, rule.symbols(), rule.symbols(), shift}};

  const int width = n - 1;
  const std::size_t blocks = word_count(width, m, std::size_t{1} << 16);

  std::vector<std::string> alphabet;
  alphabet.reserve(blocks - 1);
  for (std::size_t b = 1; b < blocks; ++b)
    alphabet.push_back(
        block_token(word_from_index(b, width, m), rule.symbols()));
  SymbolTable target(
      block_token(Word(static_cast<std::size_t>(width), kQuiescent),
                  rule.symbols()),
      std::move(alphabet));

  const auto M = static_cast<Eigen::Index>(blocks);
  Eigen::MatrixXcd images = Eigen::MatrixXcd::Zero(M, M * M);
  for (std::size_t xb = 0; xb < blocks; ++xb) {
    const Word x = word_from_index(xb, width, m);
    for (std::size_t yb = 0; yb < blocks; ++yb) {
      const Word y = word_from_index(yb, width, m);
      // Component at block z is prod_t <z_t|delta|x_t..x_W y_1..y_t>;
      // build the tensor product factor by factor.
      Eigen::VectorXcd column = Eigen::VectorXcd::Ones(1);
      for (int t = 1; t <= width; ++t) {
        Word w;
        w.reserve(static_cast<std::size_t>(n));
        for (int u = t; u <= width; ++u)
          w.push_back(x[static_cast<std::size_t>(u - 1)]);
        for (int u = 1; u <= t; ++u)
          w.push_back(y[static_cast<std::size_t>(u - 1)]);
        const Eigen::VectorXcd factor = normalized.image(w);
        Eigen::VectorXcd expanded(column.size() * m);
        for (Eigen::Index head = 0; head < column.size(); ++head)
          for (SymbolId s = 0; s < m; ++s)
            expanded(head * m + s) = column(head) * factor(s);
        column = std::move(expanded);
      }
      images.col(static_cast<Eigen::Index>(xb) * M +
                 static_cast<Eigen::Index>(yb)) = column;
    }
  }

  BlockEncoding encoding{width, rule.symbols(), target, shift};
  return ReducedRule{LocalRule(std::move(target), {0, 1}, std::move(images)),
                     std::move(encoding)};
}

Configuration encode_configuration(const Configuration& c,
                                   const BlockEncoding& enc) {
  const int width = enc.block_width;
  if (width == 1) return c;
  const int m = enc.source_table.size();
  Configuration out;
  const auto idom = interval_domain(c);
  if (!idom) return out;
  // Block j covers source cells [width*j, width*j + width - 1].
  const std::int64_t first = floor_div(idom->lo, width);
  const std::int64_t last = floor_div(idom->hi, width);
  for (std::int64_t j = first; j <= last; ++j) {
    Word w(static_cast<std::size_t>(width), kQuiescent);
    for (int t = 0; t < width; ++t)
      w[static_cast<std::size_t>(t)] = c.at(j * width + t);
    out.set(j, static_cast<SymbolId>(word_index(w, m)));
  }
  return out;
}

Configuration decode_configuration(const Configuration& c,
                                   const BlockEncoding& enc) {
  const int width = enc.block_width;
  if (width == 1) return c;
  const int m = enc.source_table.size();
  Configuration out;
  for (const auto& [j, block] : c.cells()) {
    const Word w = word_from_index(static_cast<std::size_t>(block), width, m);
    for (int t = 0; t < width; ++t)
      out.set(j * width + t, w[static_cast<std::size_t>(t)]);
  }
  return out;
}

}  // namespace qca
