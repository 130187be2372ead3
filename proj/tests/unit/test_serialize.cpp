#include <gtest/gtest.h>

#include "csg/enumerate.hpp"
#include "csg/errors.hpp"
#include "csg/serialize.hpp"
#include "fixtures.hpp"

using namespace csg;

TEST(Json, ConeRoundTrip) {
  const Cone c({Point{24, 2}, Point{7, 4}});
  EXPECT_EQ(io::cone_to_json(c), R"({"dim":2,"rays":[[7,4],[12,1]]})");
  EXPECT_EQ(io::cone_from_json(io::cone_to_json(c)), c);
  EXPECT_THROW(io::cone_from_json(R"({"dim":3,"rays":[[1,0],[0,1]]})"), Error);
  EXPECT_THROW(io::cone_from_json("{"), Error);
}

TEST(Json, OrderRoundTrip) {
  for (const auto& o : {MonomialOrder::graded_lex(2), MonomialOrder::lex(2, {1, 0}),
                        test::matrix_m(), MonomialOrder::graded_lex(2, {1, 0})}) {
    EXPECT_EQ(io::order_from_json(io::order_to_json(o), 2), o);
  }
  EXPECT_EQ(io::order_to_json(test::matrix_m()), R"({"functionals":[[1,2],[1,0]],"kind":"matrix"})");
  EXPECT_THROW(io::order_from_json(R"({"kind":"weird"})", 2), Error);
}

TEST(Json, SemigroupRoundTrip) {
  const auto s = test::from_elements(27, {10, 13, 20, 23, 26});
  const auto text = io::semigroup_to_json(s);
  EXPECT_EQ(text.rfind(R"({"gaps":[1,2,3,)", 0), 0u);
  EXPECT_EQ(io::semigroup_from_json(text), s);

  const auto w = GapSemigroup::from_gaps(test::wedge(), test::matrix_m(),
                                         {Point{1, 0}, Point{1, 1}, Point{3, 1}});
  EXPECT_EQ(io::semigroup_from_json(io::semigroup_to_json(w)), w);
  EXPECT_THROW(io::semigroup_from_json(R"({"gaps":[2]})"), ClosureViolation);
}

TEST(Json, TreeRoundTrip) {
  const auto tree = enumerate_A_f(test::skew_ambient(), Point{7, 2});
  const auto text = io::tree_to_json(tree);
  const auto back = io::tree_from_json(text);
  EXPECT_EQ(io::tree_to_json(back), text);
  EXPECT_EQ(back.gap_sets(), tree.gap_sets());
  const auto med = enumerate_AMED_fm(13, 4);
  EXPECT_EQ(io::tree_to_json(io::tree_from_json(io::tree_to_json(med))), io::tree_to_json(med));
}

TEST(Dot, AmedChain) {
  const auto dot = io::to_dot(enumerate_AMED_fm(13, 4));
  EXPECT_EQ(dot,
            "digraph AMED_fm {\n"
            "  n0 [label=\"Δ\"];\n"
            "  n1 [label=\"10\"];\n"
            "  n2 [label=\"6\"];\n"
            "  n0 -> n1 [label=\"10\"];\n"
            "  n1 -> n2 [label=\"6\"];\n"
            "}\n");
}

TEST(Dot, SingleNode) {
  const auto dot = io::to_dot(enumerate_A_f(numerical_ambient(), num(1)));
  EXPECT_NE(dot.find("n0 [label=\"Δ\"]"), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}

TEST(Dot, SkewTreePath) {
  const auto tree = enumerate_A_f(test::skew_ambient(), Point{7, 2});
  const auto dot = io::to_dot(tree);
  // Walk Δ → (6,2) → (5,1) → (4,2) → (3,1) through the edge list.
  std::size_t at = 0;
  for (const Point& x : {Point{6, 2}, Point{5, 1}, Point{4, 2}, Point{3, 1}}) {
    std::optional<std::size_t> next;
    for (std::size_t i = 0; i < tree.size(); ++i) {
      if (tree.nodes[i].parent == at && tree.nodes[i].adjoined == x) next = i;
    }
    ASSERT_TRUE(next) << x.to_string();
    const std::string edge = "n" + std::to_string(at) + " -> n" + std::to_string(*next) +
                             " [label=\"" + x.to_string() + "\"]";
    EXPECT_NE(dot.find(edge), std::string::npos) << edge;
    at = *next;
  }
  EXPECT_EQ(io::to_dot(enumerate_A_f(test::skew_ambient(), Point{7, 2}, {3, false})), dot);
}

TEST(GapSyntax, Parse) {
  EXPECT_EQ(io::parse_gap_syntax("1..27\\{10,13,20,23,26}").size(), 22u);
  EXPECT_EQ(io::parse_gap_syntax("1,2,4"), (std::vector<Coord>{1, 2, 4}));
  EXPECT_EQ(io::parse_gap_syntax("{1..3,7}"), (std::vector<Coord>{1, 2, 3, 7}));
  EXPECT_THROW(io::parse_gap_syntax("1..x"), Error);
  EXPECT_THROW(io::parse_gap_syntax("5..1"), Error);
  EXPECT_THROW(io::parse_gap_syntax("1..9\\3"), Error);
}

TEST(PointSyntax, Parse) {
  EXPECT_EQ(io::parse_point("13"), num(13));
  EXPECT_EQ(io::parse_point("(7,2)"), (Point{7, 2}));
  EXPECT_EQ(io::parse_point("7, 2"), (Point{7, 2}));
  EXPECT_EQ(io::parse_point_list("(4,2),(5,1)", 2), (std::vector<Point>{{4, 2}, {5, 1}}));
  EXPECT_EQ(io::parse_point_list("{}", 2), std::vector<Point>{});
  EXPECT_EQ(io::parse_point_list("10,13", 1), (std::vector<Point>{num(10), num(13)}));
  EXPECT_THROW(io::parse_point_list("(1,2,3)", 2), Error);
  EXPECT_THROW(io::parse_point("(a,b)"), Error);
}
