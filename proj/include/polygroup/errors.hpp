#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polygroup {

// Base for all library errors; `code` is a stable machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Ill-formed input: malformed words, dimension mismatches, zero covectors.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input outside what the implemented results cover.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Two computation routes that must agree did not; the detail carries the
// evidence and is never swallowed by callers.
class DiscrepancyError : public Error {
 public:
  using Error::Error;
};

}  // namespace polygroup
