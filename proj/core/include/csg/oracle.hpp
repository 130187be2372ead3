#pragma once

#include <set>
#include <vector>

#include "csg/semigroup.hpp"

namespace csg::oracle {

// Exhaustive reference implementations. Exponential by design; every entry
// point has an explicit size guard.

enum class Filter { All, A, Arf, Sat, MedA };

/// Every numerical semigroup with Frobenius number f passing `filter`.
/// Capability error when f > guard.
std::vector<GapSemigroup> brute_family(Coord f, Filter filter, Coord guard = 20);

/// Every C-semigroup with Frobenius element f (All or A filter), by subset
/// search over {0 < x <= f}. Capability error when that set exceeds guard.
std::vector<GapSemigroup> brute_family_2d(const AmbientPtr& ambient, const Point& f,
                                          Filter filter = Filter::A, std::size_t guard = 16);

/// s + z_1 s_1 + ... + z_r s_r in S for s_i <= s in S and |z_i| <= bound.
bool brute_saturated(const GapSemigroup& s, Coord bound);

/// Minimal generators found by testing every candidate up to pi_1 level
/// 2 (pi_1(Fb) + Hmax) for a decomposition.
std::vector<Point> brute_msg(const GapSemigroup& s);

/// Definitional predicates used by brute_family.
bool brute_is_A(const GapSemigroup& s);
bool brute_is_arf(const GapSemigroup& s);
bool brute_is_med(const GapSemigroup& s);

std::set<std::vector<Point>> gap_sets(const std::vector<GapSemigroup>& family);

}  // namespace csg::oracle
