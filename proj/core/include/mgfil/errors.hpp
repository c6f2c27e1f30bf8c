#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mgfil {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched arity between multi-indices, ideals, or filtration pieces.
struct ArityError : Error {
  using Error::Error;
};

// Exact integer arithmetic left the machine-word range.
struct OverflowError : Error {
  using Error::Error;
};

// Operation undefined for the given operands (colon by zero, closure of zero, ...).
struct DomainError : Error {
  using Error::Error;
};

// Colength requested for an ideal without a pure power in every variable.
struct NotMPrimaryError : Error {
  using Error::Error;
};

// No per-axis stabilization threshold exists inside the scanned box.
struct NoStabilizationError : Error {
  NoStabilizationError(const std::string& what, int axis) : Error(what), axis(axis) {}
  int axis;
};

// Polynomial fitting failed; `kind` tells why, `detail` names the offending point or axis.
struct FitError : Error {
  enum class Kind { Singular, Mismatch, NonIntegral, DegreeDeficient };
  FitError(const std::string& what, Kind kind) : Error(what), kind(kind) {}
  Kind kind;
};

// A normalized leading coefficient that must be positive is not.
struct PositivityError : Error {
  using Error::Error;
};

// Candidate entry lies outside the ideal it must belong to.
struct MembershipError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct ValidationError : Error {
  using Error::Error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace mgfil
