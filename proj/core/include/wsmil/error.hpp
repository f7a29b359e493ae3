#ifndef WSMIL_ERROR_HPP
#define WSMIL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wsmil {

// Malformed input file. `line` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric trouble: non-PSD kernels, iteration caps treated as hard errors, ...
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wsmil

#endif  // WSMIL_ERROR_HPP
