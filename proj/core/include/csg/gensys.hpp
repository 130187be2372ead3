#pragma once

#include <string>
#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

struct ClosureResult {
  GapSemigroup semigroup;
  /// "empty", "rank1", "rank2" or "general": which description produced it.
  std::string branch;
};

/// A(f)[X], the least member of A(f) containing X. Computed as <X> ∪ Δ(f)
/// after checking that f is not in <X> and that no two small elements are
/// consecutive. Infeasible ("NOT_AN_AF_SET") otherwise.
ClosureResult closure(const AmbientPtr& ambient, const Point& f, const std::vector<Point>& x);

/// Same set, obtained by intersecting every enumerated member of A(f) that
/// contains X.
GapSemigroup closure_by_intersection(const AmbientPtr& ambient, const Point& f,
                                     const std::vector<Point>& x);

/// N(S) ∩ msg(S). Precondition: S is an A-semigroup with gaps.
std::vector<Point> a_msg(const GapSemigroup& s);
std::size_t a_rank(const GapSemigroup& s);

/// g(<m> ∪ Δ(f)) = f - floor(f/m) for numerical rank-1 members.
Coord rank1_genus(Coord f, Coord m);

struct Rank2Report {
  bool feasible = false;
  bool coprime = false;
  /// Coprime case: {λr mod m : λ in [floor((f-1)/r)]} ∪ {0, m}, ascending.
  std::vector<Coord> x_set;
  /// Smallest consecutive pair below f in the non-coprime case.
  std::vector<Coord> witness;
};

/// Whether <m, r> ∪ {f+1, →} is an A-semigroup of A(f)-rank two.
Rank2Report rank2_feasible_numerical(Coord m, Coord r, Coord f);

/// Ap(S, m) for S = <m, r> ∪ {f+1, →}: the multiples λr for λ in {0} ∪ [l]
/// together with the f + i, i in [m], of the remaining residues.
AperySet rank2_apery(Coord m, Coord r, Coord f);

/// Whether <m, r> is a C-semigroup (numerical: gcd 1; p = 2: it equals C).
bool pair_generates_csemigroup(const Cone& cone, const Point& m, const Point& r);

}  // namespace csg
