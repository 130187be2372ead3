#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "csg/geometry.hpp"
#include "csg/order.hpp"
#include "csg/point.hpp"

namespace csg {

/// Cone plus monomial order shared by every semigroup of a computation.
/// Holds a cache of msg(Δ(f)) keyed by f.
class Ambient {
 public:
  /// Throws on dimension mismatch or an order that fails validate().
  Ambient(Cone cone, MonomialOrder order);

  const Cone& cone() const noexcept { return cone_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return cone_.dim(); }

  /// Largest pi_1 value over the Hilbert basis of the cone.
  Coord hilbert_max() const;

  /// Minimal generators of Δ(f) (cached).
  const std::vector<Point>& delta_msg(const Point& f) const;

  bool less(const Point& a, const Point& b) const { return order_.less(a, b); }

 private:
  Cone cone_;
  MonomialOrder order_;
  mutable std::once_flag hilbert_once_;
  mutable Coord hilbert_max_ = 0;
  mutable std::mutex cache_mutex_;
  mutable std::map<Point, std::vector<Point>> delta_msg_cache_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(Cone cone, MonomialOrder order);
/// N with its unique monomial order.
AmbientPtr numerical_ambient();

/// C-semigroup S = C \ H(S), stored through its finite gap set.
///
/// Values are immutable; Frobenius element, multiplicity and small elements
/// are computed at construction.
class GapSemigroup {
 public:
  /// Validated construction. Throws ClosureViolation naming g = a + b.
  static GapSemigroup from_gaps(AmbientPtr ambient, std::vector<Point> gaps);
  static GapSemigroup from_gaps(const Cone& cone, const MonomialOrder& order,
                                std::vector<Point> gaps);
  static GapSemigroup numerical(const std::vector<Coord>& gaps);
  /// S = C.
  static GapSemigroup whole_cone(AmbientPtr ambient);

  /// No closure check. For callers that already know the complement is a
  /// semigroup.
  static GapSemigroup from_trusted_gaps(AmbientPtr ambient, std::vector<Point> gaps);

  const AmbientPtr& ambient_ptr() const noexcept { return ambient_; }
  const Ambient& ambient() const noexcept { return *ambient_; }
  const Cone& cone() const noexcept { return ambient_->cone(); }
  const MonomialOrder& order() const noexcept { return ambient_->order(); }
  std::size_t dim() const noexcept { return ambient_->dim(); }

  /// H(S), ascending in the order.
  const std::vector<Point>& gaps() const noexcept { return gaps_; }
  bool is_gap(const Point& x) const;
  bool contains(const Point& x) const;

  /// Absent exactly when S = C.
  const std::optional<Point>& frobenius() const noexcept { return frobenius_; }
  /// Frobenius element; NOT_PRESENT when S = C.
  const Point& frobenius_element() const;
  const Point& multiplicity() const noexcept { return multiplicity_; }
  /// Least element of S outside <m(S)>. NOT_PRESENT when S = <m(S)>.
  Point ratio() const;
  /// N(S) = {x in S : x < Fb(S)}, ascending, including 0.
  const std::vector<Point>& small_elements() const noexcept { return small_; }
  std::size_t genus() const noexcept { return gaps_.size(); }

  /// Minimal generating set, ascending.
  std::vector<Point> msg() const;
  std::size_t embedding_dimension() const { return msg().size(); }

  /// "{0,4,8,12,14,→}" for numerical semigroups, the gap list otherwise.
  std::string to_string() const;

  friend bool operator==(const GapSemigroup& a, const GapSemigroup& b);

 private:
  friend GapSemigroup adjoin(const GapSemigroup& s, const Point& x);

  GapSemigroup() = default;
  GapSemigroup(AmbientPtr ambient, std::vector<Point> gaps);

  AmbientPtr ambient_;
  std::vector<Point> gaps_;
  std::optional<Point> frobenius_;
  Point multiplicity_;
  std::vector<Point> small_;
};

struct AperySet {
  Point base;
  std::vector<Point> elements;  // ascending in the order

  friend bool operator==(const AperySet&, const AperySet&) = default;
};

/// Ap(S,b). For p = 1 the classical {a in S : a - b not in S}, one element per
/// residue mod b. For p >= 2 the finite set {0} ∪ {a in S : a - b in H(S)}.
AperySet apery(const GapSemigroup& s, const Point& b);

/// Ap(S ∪ {x}, b) updated from Ap(S, b): filters the candidates
/// {x} ∪ (Ap(S,b) \ {x+b}). Checks the equality case x - b in H(S).
AperySet apery_adjoin(const GapSemigroup& s, const Point& x, const Point& b);
AperySet apery_adjoin(const GapSemigroup& s, const AperySet& ap, const Point& x);

/// Maximal elements of Ap(S, m(S)) under <=_S, shifted by -m(S).
std::vector<Point> pseudo_frobenius(const GapSemigroup& s);
/// {x in H(S) : x + s in S for all s in S \ {0}}.
std::vector<Point> pseudo_frobenius_definitional(const GapSemigroup& s);
/// {x in PF(S) : 2x in S}.
std::vector<Point> special_gaps(const GapSemigroup& s);
bool is_special_gap(const GapSemigroup& s, const Point& x);

/// S ∪ {x}; precondition error unless x in SG(S).
GapSemigroup adjoin(const GapSemigroup& s, const Point& x);
GapSemigroup remove_multiplicity(const GapSemigroup& s);
GapSemigroup remove_ratio(const GapSemigroup& s);

/// x in the monoid generated by `generators`.
bool monoid_contains(const std::vector<Point>& generators, const Point& x);

/// Canonical numerical point.
inline Point num(Coord v) { return Point{v}; }

}  // namespace csg
