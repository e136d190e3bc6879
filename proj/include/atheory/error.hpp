#pragma once

#include <stdexcept>
#include <string>

namespace atheory {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by operations that need a distinguished vertex when none is set.
class MissingBaseError : public Error {
 public:
  MissingBaseError() : Error("graph has no base vertex") {}
};

// Malformed input file. `line`/`column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace atheory
