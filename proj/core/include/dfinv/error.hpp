#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfinv {

/// Base class for all errors raised by the library.  `kind()` is a short
/// machine-readable tag used by the CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("dimension_mismatch", what) {}
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error("precondition", what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input too large for an exponential-time enumeration.
class GuardExceeded : public Error {
 public:
  explicit GuardExceeded(const std::string& what)
      : Error("guard_exceeded", what) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error("schema", what) {}
};

}  // namespace dfinv
