#pragma once

#include <vector>

#include "csg/order.hpp"
#include "csg/point.hpp"

namespace csg {

/// Rational cone C inside N^p given by its extremal rays. Membership means
/// C intersected with N^p.
///
/// Rays are stored primitive (coordinate gcd 1) and sorted, so two cones
/// with the same extremal rays compare equal.
class Cone {
 public:
  /// Rays are normalized to primitive vectors and generators that are not
  /// extremal are dropped. Throws an input error on zero rays or when the
  /// extremal rays do not span R^p.
  explicit Cone(std::vector<Point> rays);

  /// The cone N^p.
  static Cone orthant(std::size_t dim);
  /// N, home of the numerical semigroups.
  static Cone numerical() { return orthant(1); }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Point>& rays() const noexcept { return rays_; }

  bool contains(const Point& x) const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> rays_;
  // p = 2 only: rays ordered counter-clockwise, lower slope first.
  Point lower_;
  Point upper_;
};

bool cone_contains(const Cone& cone, const Point& x);

/// Minimal nonzero lattice point on each extremal ray.
std::vector<Point> primitive_ray_elements(const Cone& cone);

/// Minimal generating set of the monoid C ∩ N^p, sorted coordinate-lex.
/// Supported for p <= 3.
std::vector<Point> hilbert_basis(const Cone& cone);

/// All x in C with x <= k, ascending in the order.
std::vector<Point> enumerate_up_to(const Cone& cone, const MonomialOrder& order, const Point& k);

/// All x in C with pi_1(x) == level, ascending in the order.
std::vector<Point> points_at_level(const Cone& cone, const MonomialOrder& order, Coord level);

/// All x in C with pi_1(x) <= level, ascending in the order.
std::vector<Point> points_up_to_level(const Cone& cone, const MonomialOrder& order, Coord level);

/// x in the real cone spanned by `generators` (any p, exact arithmetic).
bool in_rational_cone(const std::vector<Point>& generators, std::span<const Coord> x);

}  // namespace csg
