#pragma once

#include <stdexcept>
#include <string>

namespace birkhoff {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Denominator of zero anywhere in rational construction.
class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Malformed serialized data (numbers, manifests, records, documents).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Assembled polynomial contradicts a redundant constraint (leftover point,
/// witness value, degree). Signals an engine or input fault.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what) : Error(what) {}
};

/// Assembled polynomial takes a non-integer value at an integer point.
class IntegralityError : public Error {
 public:
  explicit IntegralityError(const std::string& what) : Error(what) {}
};

/// A named structural fact (anchor, zero, functional equation, factorial)
/// failed on a finished polynomial.
class StructuralError : public Error {
 public:
  StructuralError(std::string check, const std::string& what)
      : Error(what), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

/// Two results for the same task disagree. Unrecoverable; exit code 3.
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what) : Error(what) {}
};

/// A run is missing task results. Exit code 2.
class IncompleteError : public Error {
 public:
  explicit IncompleteError(const std::string& what) : Error(what) {}
};

}  // namespace birkhoff
