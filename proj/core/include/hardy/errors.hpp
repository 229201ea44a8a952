#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input value lies outside the domain of the mean or generator.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter violates an operation's precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An explicit sequence was asked for a term past its end.
class ExhaustedError : public Error {
 public:
  using Error::Error;
};

/// A description string could not be parsed. `token()` is the offending piece.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token)
      : Error(message + " (at '" + token + "')"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace hardy
