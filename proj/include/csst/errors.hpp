#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csst {

// Incompatible vector or matrix shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A pair of codes that was required to be nested is not.
class ContainmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad generator polynomial, empty coset, undefined distance and similar.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction refused because one of its checked preconditions is false.
// `condition()` is a short stable identifier reported in JSON output.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string condition, const std::string& detail)
      : std::runtime_error(condition + ": " + detail), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

// An enumeration or allocation guard was exceeded.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or specification string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, std::size_t line, const std::string& what)
      : std::runtime_error(where + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace csst
