#ifndef QCA_RULEFILE_HPP
#define QCA_RULEFILE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qca/rule.hpp"

namespace qca {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the line-oriented rule format:
///
///   # comment
///   alphabet = p r
///   quiescent = q
///   neighborhood = 0 1
///   rule q p = 0.70710678 q + 0.70710678 p
///
/// Complex literals are `a`, `bi`, `a+bi`, `a-bi` with no spaces inside
/// a literal. Unlisted (word, symbol) amplitudes are zero. Throws
/// ParseError with line/column on malformed input.
LocalRule parse_rule_file(const std::string& text);

/// Canonical rendering; parse_rule_file(print_rule_file(r)) == r.
std::string print_rule_file(const LocalRule& rule);

/// Shipped rules: "qflip", "xor", "xorprime", "sample". Throws
/// std::invalid_argument for unknown names.
std::string builtin_example(const std::string& name);
std::vector<std::string> builtin_example_names();

}  // namespace qca

#endif  // QCA_RULEFILE_HPP
