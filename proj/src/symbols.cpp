#include "qca/symbols.hpp"

#include <sstream>
#include <stdexcept>

namespace qca {

SymbolTable::SymbolTable(std::string quiescent,
                         std::vector<std::string> alphabet) {
  tokens_.reserve(alphabet.size() + 1);
  tokens_.push_back(std::move(quiescent));
  for (auto& tok : alphabet) tokens_.push_back(std::move(tok));
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].empty())
      throw std::invalid_argument("empty symbol token");
    auto [it, inserted] =
        index_.emplace(tokens_[i], static_cast<SymbolId>(i));
    if (!inserted)
      throw std::invalid_argument("duplicate symbol token: " + tokens_[i]);
  }
}

const std::string& SymbolTable::token(SymbolId id) const {
  if (id < 0 || id >= size())
    throw std::out_of_range("symbol id out of range");
  return tokens_[static_cast<std::size_t>(id)];
}

std::optional<SymbolId> SymbolTable::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? std::nullopt : std::optional<SymbolId>(it->second);
}

SymbolId SymbolTable::require(std::string_view token) const {
  auto id = find(token);
  if (!id)
    throw std::invalid_argument("unknown symbol token: " + std::string(token));
  return *id;
}

Word SymbolTable::word(const std::vector<std::string>& tokens) const {
  Word w;
  w.reserve(tokens.size());
  for (const auto& tok : tokens) w.push_back(require(tok));
  return w;
}

std::size_t word_index(const Word& w, int base) {
  std::size_t idx = 0;
  for (SymbolId s : w) {
    if (s < 0 || s >= base)
      throw std::out_of_range("symbol id outside alphabet");
    idx = idx * static_cast<std::size_t>(base) + static_cast<std::size_t>(s);
  }
  return idx;
}

Word word_from_index(std::size_t index, int length, int base) {
  Word w(static_cast<std::size_t>(length), kQuiescent);
  for (int i = length - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] =
        static_cast<SymbolId>(index % static_cast<std::size_t>(base));
    index /= static_cast<std::size_t>(base);
  }
  if (index != 0) throw std::out_of_range("word index outside table");
  return w;
}

std::size_t word_count(int length, int base, std::size_t cap) {
  std::size_t count = 1;
  for (int i = 0; i < length; ++i) {
    if (count > cap / static_cast<std::size_t>(base))
      throw std::length_error("word space exceeds size cap");
    count *= static_cast<std::size_t>(base);
  }
  return count;
}

std::string format_word(const Word& w, const SymbolTable& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << table.token(w[i]);
  }
  return out.str();
}

}  // namespace qca
