#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "realbezout/polynomial.hpp"

namespace rbz {

/// Error raised by the text readers; carries the 1-based line of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: one term per line, `coef e1 e2 ... ek`, coef an integer or p/q.
// `#` starts a comment. A blank line ends a polynomial, so a file can hold a
// whole system. The variable count is the number of exponents per line and
// must agree across the file. The zero polynomial is written as `0 0 ... 0`.

std::vector<Polynomial> parse_system(std::string_view text);
/// Parses exactly one polynomial; throws ParseError if the text holds several.
Polynomial parse_polynomial(std::string_view text);

std::string format_polynomial(const Polynomial& p);
std::string format_system(const std::vector<Polynomial>& system);

std::vector<Polynomial> read_system_file(const std::string& path);

}  // namespace rbz
