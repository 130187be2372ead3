#pragma once

#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

/// Predicate outcome. When the predicate fails the witness names the
/// offending elements: (s, e) for is_A, (x, y, z) for is_arf, (s) for
/// is_saturated, the generators for is_MED.
struct Verdict {
  bool value = false;
  std::vector<Point> witness;
  explicit operator bool() const noexcept { return value; }
};

/// No s in N(S) and unit vector e with s + e in N(S).
Verdict is_A(const GapSemigroup& s);

/// The window Υ = {x in C : x < f, pi_1(x) > pi_1(f - m - ē)}.
/// For p = 1 the shorter window {f-m+1, ..., f-1} is used.
struct UpsilonContext {
  Point f;
  Point m;
  Point ebar;
  Coord threshold = 0;
  std::vector<Point> upsilon;  // ascending in the order
};

/// Computes the window without requiring f > 2m.
UpsilonContext upsilon_window(const Ambient& ambient, const Point& f, const Point& m);

/// is_A through conditions C1 (on Υ) and C2 (on the threshold level).
/// Capability error unless Fb(S) > 2 m(S).
Verdict is_A_upsilon(const GapSemigroup& s);

struct ResidueReport {
  bool value = false;
  /// X ∪ {0, b}, ascending, where X = {i in [b-1] : w(i) < Fb(S)}.
  std::vector<Coord> x_set;
  explicit operator bool() const noexcept { return value; }
};

/// Numerical only: S is an A-semigroup iff X ∪ {0,b} has no two consecutive
/// integers.
ResidueReport residue_A_check(const GapSemigroup& s, Coord b);

/// Numerical only: e(S) = m(S).
Verdict is_MED(const GapSemigroup& s);
/// Numerical only: x + y - z in S for x >= y >= z in S.
Verdict is_arf(const GapSemigroup& s);
/// Numerical only: s + gcd{x in S \ {0} : x <= s} in S for s in N(S).
Verdict is_saturated(const GapSemigroup& s);

}  // namespace csg
