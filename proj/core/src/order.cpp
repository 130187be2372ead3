#include "csg/order.hpp"

#include <algorithm>
#include <numeric>

#include "csg/errors.hpp"
#include "csg/geometry.hpp"

namespace csg {
namespace {

__extension__ typedef __int128 Wide;

std::vector<std::size_t> checked_priority(std::size_t dim, std::vector<std::size_t> var_order) {
  if (dim == 0) throw_input("order dimension must be positive");
  if (var_order.empty()) {
    var_order.resize(dim);
    std::iota(var_order.begin(), var_order.end(), std::size_t{0});
    return var_order;
  }
  auto sorted = var_order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != dim || sorted[i] != i) {
      throw_input("variable priority must be a permutation of 0.." + std::to_string(dim - 1));
    }
  }
  return var_order;
}

MonomialOrder::Functional unit_functional(std::size_t dim, std::size_t i) {
  MonomialOrder::Functional f(dim, 0);
  f[i] = 1;
  return f;
}

}  // namespace

const char* to_string(OrderIssue issue) {
  switch (issue) {
    case OrderIssue::None: return "none";
    case OrderIssue::Singular: return "singular functionals";
    case OrderIssue::NonPositiveFirstWeight: return "first functional not strictly positive";
    case OrderIssue::DimensionMismatch: return "dimension mismatch";
  }
  return "unknown";
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<Functional> functionals,
                             std::vector<std::size_t> var_order)
    : kind_(kind), functionals_(std::move(functionals)), var_order_(std::move(var_order)) {}

MonomialOrder MonomialOrder::lex(std::size_t dim, std::vector<std::size_t> var_order) {
  var_order = checked_priority(dim, std::move(var_order));
  std::vector<Functional> rows;
  for (std::size_t v : var_order) rows.push_back(unit_functional(dim, v));
  return MonomialOrder(OrderKind::Lex, std::move(rows), std::move(var_order));
}

MonomialOrder MonomialOrder::graded_lex(std::size_t dim, std::vector<std::size_t> var_order) {
  var_order = checked_priority(dim, std::move(var_order));
  std::vector<Functional> rows{Functional(dim, 1)};
  for (std::size_t i = 0; i + 1 < dim; ++i) rows.push_back(unit_functional(dim, var_order[i]));
  return MonomialOrder(OrderKind::GradedLex, std::move(rows), std::move(var_order));
}

MonomialOrder MonomialOrder::matrix(std::vector<Functional> functionals) {
  if (functionals.empty()) throw_input("matrix order needs at least one functional");
  return MonomialOrder(OrderKind::Matrix, std::move(functionals), {});
}

MonomialOrder MonomialOrder::from_right_matrix(const std::vector<std::vector<Coord>>& m) {
  if (m.empty()) throw_input("empty order matrix");
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw_input("ragged order matrix");
  }
  std::vector<Functional> rows(cols, Functional(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) rows[j][i] = m[i][j];
  }
  return matrix(std::move(rows));
}

OrderVerdict MonomialOrder::validate() const {
  const std::size_t p = functionals_.size();
  for (const auto& f : functionals_) {
    if (f.size() != p) return {false, OrderIssue::DimensionMismatch};
  }
  if (determinant(functionals_) == 0) return {false, OrderIssue::Singular};
  for (Coord c : functionals_.front()) {
    if (c <= 0) return {false, OrderIssue::NonPositiveFirstWeight};
  }
  return {true, OrderIssue::None};
}

Coord MonomialOrder::pi1(std::span<const Coord> x) const {
  const auto& w = functionals_.front();
  if (x.size() != w.size()) throw_input("dimension mismatch in order evaluation");
  Coord s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
  return s;
}

Coord MonomialOrder::pi1(const Point& x) const { return pi1(x.coords()); }

std::strong_ordering MonomialOrder::compare(const Point& a, const Point& b) const {
  if (a.dim() != dim() || b.dim() != dim()) {
    throw_input("dimension mismatch: comparing " + a.to_string() + " and " + b.to_string() +
                " under an order on N^" + std::to_string(dim()));
  }
  for (const auto& f : functionals_) {
    Coord sa = 0;
    Coord sb = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      sa += f[i] * a[i];
      sb += f[i] * b[i];
    }
    if (auto c = sa <=> sb; c != 0) return c;
  }
  // Only reachable for singular functionals; keeps the comparison total.
  return a <=> b;
}

std::string MonomialOrder::describe() const {
  auto priority = [&] {
    std::string s;
    for (std::size_t i = 0; i < var_order_.size(); ++i) {
      if (i) s += ">";
      s += "x" + std::to_string(var_order_[i] + 1);
    }
    return s;
  };
  switch (kind_) {
    case OrderKind::Lex: return "lex(" + priority() + ")";
    case OrderKind::GradedLex: return "grlex(" + priority() + ")";
    case OrderKind::Matrix: break;
  }
  std::string s = "matrix[";
  for (std::size_t r = 0; r < functionals_.size(); ++r) {
    if (r) s += ";";
    for (std::size_t i = 0; i < functionals_[r].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(functionals_[r][i]);
    }
  }
  return s + "]";
}

void require_enumerable(const MonomialOrder& order) {
  if (auto v = order.validate(); !v) {
    throw_precondition("order " + order.describe() + " is not admissible for enumeration: " +
                       to_string(v.issue));
  }
}

Point successor(const MonomialOrder& order, const Cone& cone, const Point& x) {
  require_enumerable(order);
  if (x.dim() != cone.dim()) throw_input("dimension mismatch in successor");
  const Coord start = order.pi1(x);
  // Every ray multiple eventually lands on a level, so the scan terminates.
  Coord limit = start;
  for (const auto& r : cone.rays()) limit = std::max(limit, start + order.pi1(r));
  for (Coord level = start; level <= limit; ++level) {
    for (const auto& y : points_at_level(cone, order, level)) {
      if (order.less(x, y)) return y;
    }
  }
  throw std::logic_error("successor scan exhausted");
}

Coord determinant(std::vector<std::vector<Coord>> rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw_input("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  }
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return static_cast<Coord>(sign * a[n - 1][n - 1]);
}

}  // namespace csg
