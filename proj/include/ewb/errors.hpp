#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ewb {

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised by closure() when some closed-up component carries an odd number of wens.
class NotClosable : public std::runtime_error {
 public:
  explicit NotClosable(std::size_t component)
      : std::runtime_error("not closable: component " + std::to_string(component) +
                           " has odd wen parity"),
        component_(component) {}

  /// 1-based component index (cycle order of the underlying permutation).
  std::size_t component() const noexcept { return component_; }

 private:
  std::size_t component_;
};

}  // namespace ewb
