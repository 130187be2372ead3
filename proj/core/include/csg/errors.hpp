#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "csg/point.hpp"

namespace csg {

enum class ErrorKind {
  Input,             // malformed data, dimension mismatch
  Precondition,      // operation called outside its domain
  Capability,        // valid request the library does not support
  Infeasible,        // the requested object does not exist (e.g. f in <m>)
  NotPresent,        // invariant undefined for this semigroup
  ClosureViolation,  // proposed gap set does not complement a semigroup
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a gap g splits as a + b with a, b nonzero elements of the
/// would-be semigroup.
class ClosureViolation : public Error {
 public:
  ClosureViolation(Point gap, Point a, Point b);

  const Point& gap() const noexcept { return gap_; }
  const Point& left() const noexcept { return left_; }
  const Point& right() const noexcept { return right_; }

 private:
  Point gap_;
  Point left_;
  Point right_;
};

[[noreturn]] void throw_input(const std::string& message);
[[noreturn]] void throw_precondition(const std::string& message);
[[noreturn]] void throw_capability(const std::string& message);
[[noreturn]] void throw_infeasible(const std::string& message);
[[noreturn]] void throw_not_present(const std::string& message);

}  // namespace csg
