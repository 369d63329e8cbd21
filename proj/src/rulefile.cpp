#include "qca/rulefile.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace qca {
namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back(
        {line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

[[noreturn]] void fail(const std::string& message, int line, int column) {
  throw ParseError(message, line, column);
}

double parse_real(const std::string& text, int line, int column) {
  if (text.empty()) fail("empty number", line, column);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    fail("malformed number: " + text, line, column);
  }
  if (used != text.size()) fail("malformed number: " + text, line, column);
  return value;
}

// Literals: a, bi, a+bi, a-bi, decimal with optional exponent, no
// internal spaces.
Complex parse_complex(const std::string& text, int line, int column) {
  if (text.empty()) fail("empty amplitude", line, column);
  if (text.back() != 'i' && text.back() != 'I')
    return Complex{parse_real(text, line, column), 0.0};

  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor part of an
  // exponent; absent one, the literal is purely imaginary.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] != '+' && body[i] != '-') continue;
    const char prev = body[i - 1];
    if (prev == 'e' || prev == 'E') continue;
    split = i;
    break;
  }
  if (split == std::string::npos) {
    if (body.empty() || body == "+") return Complex{0.0, 1.0};
    if (body == "-") return Complex{0.0, -1.0};
    return Complex{0.0, parse_real(body, line, column)};
  }
  const double real = parse_real(body.substr(0, split), line, column);
  std::string imag_text = body.substr(split);
  if (imag_text == "+" || imag_text == "-") imag_text += '1';
  return Complex{real, parse_real(imag_text, line, column)};
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_complex(Complex value) {
  if (value.imag() == 0.0) return format_real(value.real());
  const std::string imag = format_real(value.imag()) + "i";
  if (value.real() == 0.0) return imag;
  if (value.imag() < 0.0) return format_real(value.real()) + imag;
  return format_real(value.real()) + "+" + imag;
}

}  // namespace

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

LocalRule parse_rule_file(const std::string& text) {
  std::optional<std::vector<std::string>> alphabet;
  std::optional<std::string> quiescent;
  std::optional<std::vector<int>> neighborhood;
  int alphabet_line = 0;

  struct PendingRule {
    std::vector<Token> word;
    std::vector<std::pair<Token, Token>> terms;  // (amplitude, symbol)
    int line;
  };
  std::vector<PendingRule> pending;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].text;

    if (head == "alphabet" || head == "quiescent" || head == "neighborhood") {
      if (tokens.size() < 2 || tokens[1].text != "=")
        fail("expected '=' after " + head, line_no,
             tokens.size() < 2 ? tokens[0].column : tokens[1].column);
      if (head == "alphabet") {
        if (alphabet) fail("duplicate alphabet line", line_no, tokens[0].column);
        alphabet.emplace();
        for (std::size_t i = 2; i < tokens.size(); ++i)
          alphabet->push_back(tokens[i].text);
        alphabet_line = line_no;
      } else if (head == "quiescent") {
        if (quiescent) fail("duplicate quiescent line", line_no,
                            tokens[0].column);
        if (tokens.size() != 3)
          fail("quiescent takes exactly one token", line_no, tokens[0].column);
        quiescent = tokens[2].text;
      } else {
        if (neighborhood)
          fail("duplicate neighborhood line", line_no, tokens[0].column);
        if (tokens.size() < 3)
          fail("neighborhood needs at least one offset", line_no,
               tokens[0].column);
        neighborhood.emplace();
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          try {
            std::size_t used = 0;
            const int offset = std::stoi(tokens[i].text, &used);
            if (used != tokens[i].text.size()) throw std::invalid_argument("");
            neighborhood->push_back(offset);
          } catch (const std::exception&) {
            fail("malformed offset: " + tokens[i].text, line_no,
                 tokens[i].column);
          }
        }
        for (std::size_t i = 1; i < neighborhood->size(); ++i)
          if ((*neighborhood)[i] != (*neighborhood)[i - 1] + 1)
            fail("neighborhood offsets must be successive", line_no,
                 tokens[static_cast<std::size_t>(2 + i)].column);
      }
      continue;
    }

    if (head == "rule") {
      PendingRule rule;
      rule.line = line_no;
      std::size_t i = 1;
      while (i < tokens.size() && tokens[i].text != "=")
        rule.word.push_back(tokens[i++]);
      if (i == tokens.size())
        fail("rule line is missing '='", line_no, tokens[0].column);
      if (rule.word.empty())
        fail("rule line is missing its word", line_no, tokens[0].column);
      ++i;  // consume '='
      while (i < tokens.size()) {
        if (!rule.terms.empty()) {
          if (tokens[i].text != "+")
            fail("expected '+' between terms", line_no, tokens[i].column);
          if (++i == tokens.size())
            fail("dangling '+'", line_no, tokens[i - 1].column);
        }
        if (i + 1 >= tokens.size())
          fail("term needs an amplitude and a symbol", line_no,
               tokens[i].column);
        rule.terms.emplace_back(tokens[i], tokens[i + 1]);
        i += 2;
      }
      pending.push_back(std::move(rule));
      continue;
    }

    fail("unknown directive: " + head, line_no, tokens[0].column);
  }

  if (!quiescent) fail("missing quiescent line", line_no + 1, 1);
  if (!alphabet) fail("missing alphabet line", line_no + 1, 1);
  if (!neighborhood) fail("missing neighborhood line", line_no + 1, 1);
  for (const auto& tok : *alphabet)
    if (tok == *quiescent)
      fail("quiescent symbol listed in alphabet", alphabet_line, 1);

  std::optional<SymbolTable> table_slot;
  try {
    table_slot.emplace(*quiescent, *alphabet);
  } catch (const std::invalid_argument& e) {
    fail(e.what(), alphabet_line ? alphabet_line : 1, 1);
  }
  SymbolTable& table = *table_slot;
  const int n = static_cast<int>(neighborhood->size());

  std::vector<RuleEntry> entries;
  std::set<std::size_t> seen_words;
  for (const auto& rule : pending) {
    if (static_cast<int>(rule.word.size()) != n)
      fail("rule word must have " + std::to_string(n) + " symbols", rule.line,
           rule.word[0].column);
    Word w;
    for (const auto& tok : rule.word) {
      const auto id = table.find(tok.text);
      if (!id) fail("unknown symbol: " + tok.text, rule.line, tok.column);
      w.push_back(*id);
    }
    if (!seen_words.insert(word_index(w, table.size())).second)
      fail("duplicate rule line for word", rule.line, rule.word[0].column);
    std::set<SymbolId> seen_outputs;
    for (const auto& [amp_tok, sym_tok] : rule.terms) {
      const Complex amp = parse_complex(amp_tok.text, rule.line,
                                        amp_tok.column);
      const auto sym = table.find(sym_tok.text);
      if (!sym)
        fail("unknown symbol: " + sym_tok.text, rule.line, sym_tok.column);
      if (!seen_outputs.insert(*sym).second)
        fail("duplicate output symbol in rule line", rule.line,
             sym_tok.column);
      entries.push_back(RuleEntry{w, *sym, amp});
    }
  }

  return make_rule(std::move(table), *neighborhood, entries);
}

std::string print_rule_file(const LocalRule& rule) {
  const SymbolTable& table = rule.symbols();
  std::ostringstream out;
  out << "alphabet =";
  for (SymbolId s = 1; s < table.size(); ++s) out << ' ' << table.token(s);
  out << '\n';
  out << "quiescent = " << table.quiescent_token() << '\n';
  out << "neighborhood =";
  for (int offset : rule.neighborhood()) out << ' ' << offset;
  out << '\n';
  for (std::size_t idx = 0; idx < rule.word_count(); ++idx) {
    const Eigen::VectorXcd image = rule.image_by_index(idx);
    if (image.isZero(0.0)) continue;
    out << "rule "
        << format_word(word_from_index(idx, rule.neighborhood_size(),
                                       table.size()),
                       table)
        << " =";
    bool first = true;
    for (SymbolId s = 0; s < table.size(); ++s) {
      if (image(s) == Complex{}) continue;
      if (!first) out << " +";
      first = false;
      out << ' ' << format_complex(image(s)) << ' ' << table.token(s);
    }
    out << '\n';
  }
  return out.str();
}

std::string builtin_example(const std::string& name) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (name == "qflip") {
    SymbolTable table("q", {"p"});
    std::vector<RuleEntry> entries = {
        {{0, 0}, 0, {1.0, 0.0}},
        {{0, 1}, 0, {inv_sqrt2, 0.0}},
        {{0, 1}, 1, {inv_sqrt2, 0.0}},
        {{1, 0}, 1, {1.0, 0.0}},
        {{1, 1}, 0, {inv_sqrt2, 0.0}},
        {{1, 1}, 1, {-inv_sqrt2, 0.0}},
    };
    return print_rule_file(make_rule(std::move(table), {0, 1}, entries));
  }
  if (name == "xor") {
    SymbolTable table("0", {"1"});
    std::vector<RuleEntry> entries = {
        {{0, 0}, 0, {1.0, 0.0}},
        {{0, 1}, 1, {1.0, 0.0}},
        {{1, 0}, 1, {1.0, 0.0}},
        {{1, 1}, 0, {1.0, 0.0}},
    };
    return print_rule_file(make_rule(std::move(table), {0, 1}, entries));
  }
  if (name == "xorprime") {
    SymbolTable table("q", {"0", "1"});
    const SymbolId q = 0, z = 1, o = 2;
    std::vector<RuleEntry> entries = {
        {{q, q}, q, {1.0, 0.0}}, {{q, z}, q, {1.0, 0.0}},
        {{q, o}, q, {1.0, 0.0}}, {{z, q}, z, {1.0, 0.0}},
        {{o, q}, o, {1.0, 0.0}}, {{z, z}, z, {1.0, 0.0}},
        {{z, o}, o, {1.0, 0.0}}, {{o, z}, o, {1.0, 0.0}},
        {{o, o}, z, {1.0, 0.0}},
    };
    return print_rule_file(make_rule(std::move(table), {0, 1}, entries));
  }
  if (name == "sample") {
    SymbolTable table("0", {"1"});
    std::vector<RuleEntry> entries;
    for (SymbolId a = 0; a < 2; ++a)
      for (SymbolId b = 0; b < 2; ++b)
        for (SymbolId c = 0; c < 2; ++c)
          entries.push_back(RuleEntry{{a, b, c}, b ^ c, {1.0, 0.0}});
    return print_rule_file(make_rule(std::move(table), {0, 1, 2}, entries));
  }
  throw std::invalid_argument("unknown example: " + name);
}

std::vector<std::string> builtin_example_names() {
  return {"qflip", "xor", "xorprime", "sample"};
}

}  // namespace qca
