#ifndef QCA_SYMBOLS_HPP
#define QCA_SYMBOLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qca {

/// Symbol id into a SymbolTable. Id 0 is always the quiescent symbol.
using SymbolId = std::int32_t;

inline constexpr SymbolId kQuiescent = 0;

/// A word over qSigma, most significant (leftmost) cell first.
using Word = std::vector<SymbolId>;

/// The ordered symbol set qSigma = {q} ∪ Sigma of an automaton.
///
/// Symbols are arbitrary non-empty tokens (not single characters), so
/// block alphabets built from tuples of symbols are first-class. The
/// quiescent symbol always gets id 0; alphabet symbols keep their given
/// order and get ids 1..|Sigma|.
class SymbolTable {
 public:
  SymbolTable(std::string quiescent, std::vector<std::string> alphabet);

  /// |qSigma| = |Sigma| + 1.
  int size() const { return static_cast<int>(tokens_.size()); }
  int alphabet_size() const { return size() - 1; }

  const std::string& token(SymbolId id) const;
  const std::string& quiescent_token() const { return tokens_[0]; }

  std::optional<SymbolId> find(std::string_view token) const;
  /// Like find(), but throws std::invalid_argument for unknown tokens.
  SymbolId require(std::string_view token) const;

  /// Resolves a token sequence to a Word (throws on unknown tokens).
  Word word(const std::vector<std::string>& tokens) const;

  bool operator==(const SymbolTable& other) const {
    return tokens_ == other.tokens_;
  }
  bool operator!=(const SymbolTable& other) const { return !(*this == other); }

 private:
  std::vector<std::string> tokens_;  // [0] = quiescent
  std::unordered_map<std::string, SymbolId> index_;
};

/// Index of a word in the lexicographic enumeration of all words of its
/// length, with symbol ids as digits (leftmost cell most significant).
std::size_t word_index(const Word& w, int base);

/// Inverse of word_index for words of the given length.
Word word_from_index(std::size_t index, int length, int base);

/// Number of words of the given length, with an overflow guard
/// (throws std::length_error beyond the cap).
std::size_t word_count(int length, int base, std::size_t cap);

/// Human-readable rendering "a b c" of a word under a table.
std::string format_word(const Word& w, const SymbolTable& table);

}  // namespace qca

#endif  // QCA_SYMBOLS_HPP
