#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyqp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. alpha > 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix sizes that do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem-file text. Carries the 1-based line and the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, std::string field)
      : Error(what), line_(line), field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

/// Well-formed text whose declared and actual dimensions disagree.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A problem violating a model invariant (ordering, symmetry).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Empty feasible set, detected while projecting.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Request beyond what an operation supports (oracle size, too few alpha levels).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Membership curve whose branches are not monotone and cannot be inverted.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzyqp
