#pragma once

#include <algorithm>
#include <ostream>
#include <vector>

#include "csg/enumerate.hpp"
#include "csg/semigroup.hpp"

namespace csg {

inline void PrintTo(const Point& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace csg

namespace csg::test {

// Cone <(12,1),(7,4)> with degree-lex, home of the f = (7,2) tree.
inline AmbientPtr skew_ambient() {
  static const AmbientPtr a =
      make_ambient(Cone({Point{12, 1}, Point{7, 4}}), MonomialOrder::graded_lex(2));
  return a;
}

// Cone spanned by (1,0),(1,1),(1,2).
inline Cone wedge() { return Cone({Point{1, 0}, Point{1, 1}, Point{1, 2}}); }

inline std::vector<Point> wedge_gaps() {
  return {Point{1, 0}, Point{1, 1}, Point{2, 0}, Point{2, 1}, Point{2, 2},
          Point{3, 1}, Point{4, 0}, Point{4, 1}, Point{4, 2}, Point{5, 0}};
}

// The printed gap set is not closed ((3,0) + (1,2) = (4,2)), so it is built
// without validation.
inline GapSemigroup wedge_example(const MonomialOrder& order) {
  return GapSemigroup::from_trusted_gaps(make_ambient(wedge(), order), wedge_gaps());
}

inline MonomialOrder matrix_m() { return MonomialOrder::from_right_matrix({{1, 1}, {2, 0}}); }

inline std::vector<Point> nums(std::initializer_list<Coord> values) {
  std::vector<Point> out;
  for (Coord v : values) out.push_back(num(v));
  return out;
}

// Gaps of {0} ∪ elements ∪ {f+1, →} given the elements below f.
inline GapSemigroup from_elements(Coord f, std::initializer_list<Coord> elements) {
  std::vector<Coord> gaps;
  for (Coord v = 1; v <= f; ++v) {
    if (std::find(elements.begin(), elements.end(), v) == elements.end()) gaps.push_back(v);
  }
  return GapSemigroup::numerical(gaps);
}

inline std::vector<Coord> values(const std::vector<Point>& pts) {
  std::vector<Coord> out;
  for (const auto& p : pts) out.push_back(p[0]);
  return out;
}

}  // namespace csg::test
