#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fraczee {

// Base of every error the library raises. The CLI maps the concrete types
// onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

// A Riemann-Liouville power rule applied outside nu - order >= -1, or a value
// outside an operation's admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DataError : public Error {
 public:
  DataError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace fraczee
