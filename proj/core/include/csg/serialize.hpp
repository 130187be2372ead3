#pragma once

#include <string>
#include <vector>

#include "csg/enumerate.hpp"
#include "csg/geometry.hpp"
#include "csg/order.hpp"
#include "csg/semigroup.hpp"

namespace csg::io {

// JSON text in, JSON text out. Points of N are written as plain integers,
// points of N^p (p >= 2) as arrays.

std::string cone_to_json(const Cone& cone);
Cone cone_from_json(const std::string& text);

std::string order_to_json(const MonomialOrder& order);
/// `dim` is needed by the "lex" and "grlex" kinds.
MonomialOrder order_from_json(const std::string& text, std::size_t dim);

/// Numerical semigroups use the shorthand {"gaps": [...]}.
std::string semigroup_to_json(const GapSemigroup& s);
GapSemigroup semigroup_from_json(const std::string& text);

std::string tree_to_json(const SemigroupTree& tree);
SemigroupTree tree_from_json(const std::string& text);

/// digraph with the root labelled Δ and every other node and edge labelled
/// by its adjoined gap.
std::string to_dot(const SemigroupTree& tree);

/// "1..27\{10,13}", "1,2,4", "1..5" and combinations separated by commas.
std::vector<Coord> parse_gap_syntax(const std::string& text);

/// "13", "(7,2)" or "7,2".
Point parse_point(const std::string& text);
/// "(4,2),(5,1)", "{(4,2)}", "10,13" (numerical), or empty.
std::vector<Point> parse_point_list(const std::string& text, std::size_t dim);

}  // namespace csg::io
