#pragma once

#include <stdexcept>
#include <string>

namespace resdiff {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Leading coefficient zero, or a zero polynomial where a nonzero one is required.
class MalformedPolynomial : public Error {
 public:
  using Error::Error;
};

/// Inputs outside the domain of an operation (both polynomials constant, degree too small, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class MalformedMatrix : public Error {
 public:
  using Error::Error;
};

/// Derivative request or recovery parameters that do not fit the inputs.
class BadRequest : public Error {
 public:
  using Error::Error;
};

/// Text that cannot be read as a rational, polynomial or root list.
class ParseError : public Error {
 public:
  ParseError(const std::string& token, const std::string& why)
      : Error("cannot parse '" + token + "': " + why), token_(token) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace resdiff
