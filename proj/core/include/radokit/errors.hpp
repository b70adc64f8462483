#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radokit {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument's shape or range was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its hard cap. Raised instead of
// returning a possibly wrong answer.
class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

// enumerate_forms / q_count called with c <= p, where the level sets of the
// form family are no longer disjoint.
class FormsOverlap : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace radokit
