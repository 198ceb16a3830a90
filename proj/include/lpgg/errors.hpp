#pragma once

#include <stdexcept>
#include <string>

namespace lpgg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signature or frame size beyond what the dense representation supports.
class DimensionLimitError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different algebras (or frames of different size).
class ContextMismatchError : public Error {
 public:
  using Error::Error;
};

/// The exact radical class cannot represent the requested result
/// (square root of a non-rational or negative value, key overflow).
class InexactOperationError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's mathematical domain: point on the light
/// cone, degenerate spectrum, index out of range, wrong signature.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpgg
