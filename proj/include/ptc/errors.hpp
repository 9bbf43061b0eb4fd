#pragma once

#include <stdexcept>
#include <string>

namespace ptc {

// Base class for all engine errors. `kind` is a stable machine-readable tag
// (e.g. "DegreeMismatch"); the what() string carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Mathematical-precondition failures: the input parsed fine but violates a
// contract (non-homogeneous differential, d^2 != 0, invalid split, ...).
// The CLI maps these to exit code 1.
class MathError : public Error {
 public:
  using Error::Error;
};

// Parse / IO failures. The CLI maps these to exit code 2.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0)
      : Error("ParseError", line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error("IoError", msg) {}
};

}  // namespace ptc
