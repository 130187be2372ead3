#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "csg/point.hpp"

namespace csg {

class Cone;

enum class OrderKind { Lex, GradedLex, Matrix };

enum class OrderIssue {
  None,
  Singular,                 // functionals are linearly dependent
  NonPositiveFirstWeight,   // some coefficient of pi_1 is <= 0
  DimensionMismatch,
};

const char* to_string(OrderIssue issue);

struct OrderVerdict {
  bool valid = false;
  OrderIssue issue = OrderIssue::None;
  explicit operator bool() const noexcept { return valid; }
};

/// Monomial order on N^p given by integer functionals pi_1, ..., pi_p that
/// are compared lexicographically.
///
/// Lex and graded-lex take an optional variable priority: var_order[0] is the
/// most significant coordinate after the degree. The default is left to right,
/// so grlex compares (2,3) < (3,2).
class MonomialOrder {
 public:
  using Functional = std::vector<Coord>;

  static MonomialOrder lex(std::size_t dim, std::vector<std::size_t> var_order = {});
  static MonomialOrder graded_lex(std::size_t dim, std::vector<std::size_t> var_order = {});
  /// Rows are the functionals pi_1, ..., pi_p.
  static MonomialOrder matrix(std::vector<Functional> functionals);
  /// Order "a <= b iff aM <=_lex bM": the functionals are the columns of M.
  static MonomialOrder from_right_matrix(const std::vector<std::vector<Coord>>& m);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return functionals_.size(); }
  const std::vector<Functional>& functionals() const noexcept { return functionals_; }
  const std::vector<std::size_t>& var_order() const noexcept { return var_order_; }

  /// Non-singular functionals and a strictly positive pi_1. Orders failing
  /// this still compare, but enumeration entry points refuse them.
  OrderVerdict validate() const;

  std::strong_ordering compare(const Point& a, const Point& b) const;
  bool less(const Point& a, const Point& b) const { return compare(a, b) < 0; }

  Coord pi1(const Point& x) const;
  /// pi_1 evaluated on an arbitrary integer vector (may be negative).
  Coord pi1(std::span<const Coord> x) const;

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<Functional> functionals,
                std::vector<std::size_t> var_order);

  OrderKind kind_ = OrderKind::Matrix;
  std::vector<Functional> functionals_;
  std::vector<std::size_t> var_order_;
};

/// Comparator adaptor for std algorithms.
struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Point& a, const Point& b) const { return order->less(a, b); }
};

/// Throws a precondition error unless order.validate() holds.
void require_enumerable(const MonomialOrder& order);

/// The least element of the cone strictly above x.
Point successor(const MonomialOrder& order, const Cone& cone, const Point& x);

/// Exact determinant of a square integer matrix (Bareiss elimination).
Coord determinant(std::vector<std::vector<Coord>> rows);

}  // namespace csg
