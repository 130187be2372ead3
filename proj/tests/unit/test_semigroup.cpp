#include <gtest/gtest.h>

#include "csg/errors.hpp"
#include "csg/oracle.hpp"
#include "csg/semigroup.hpp"
#include "fixtures.hpp"

using namespace csg;
using test::from_elements;
using test::nums;
using test::values;

namespace {

GapSemigroup a27() { return GapSemigroup::numerical({1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 14, 15, 16,
                                                     17, 18, 19, 21, 22, 24, 25, 27}); }
GapSemigroup delta13_4() { return from_elements(13, {4, 8, 12}); }

}  // namespace

TEST(GapSemigroup, HalfLine) {
  std::vector<Coord> gaps;
  for (Coord v = 1; v <= 13; ++v) gaps.push_back(v);
  const auto s = GapSemigroup::numerical(gaps);
  EXPECT_EQ(s.frobenius_element(), num(13));
  EXPECT_EQ(s.multiplicity(), num(14));
  EXPECT_EQ(s.genus(), 13u);
  EXPECT_EQ(s.small_elements(), nums({0}));
}

TEST(GapSemigroup, WedgeExampleUnderDegreeLex) {
  const auto s = test::wedge_example(MonomialOrder::graded_lex(2, {1, 0}));
  EXPECT_EQ(s.frobenius_element(), (Point{4, 2}));
  const std::vector<Point> small{{0, 0}, {1, 2}, {2, 3}, {3, 0}, {3, 2}, {5, 1}, {6, 0}};
  auto got = s.small_elements();
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, small);
}

TEST(GapSemigroup, WedgeExampleUnderMatrixOrder) {
  const auto s = test::wedge_example(test::matrix_m());
  EXPECT_EQ(s.frobenius_element(), (Point{4, 2}));
  auto got = s.small_elements();
  std::sort(got.begin(), got.end());
  const std::vector<Point> small{{0, 0}, {1, 2}, {2, 3}, {3, 0}, {3, 2}, {5, 1}, {6, 0}, {7, 0}};
  EXPECT_EQ(got, small);
}

TEST(GapSemigroup, WedgeExampleIsNotClosed) {
  try {
    GapSemigroup::from_gaps(test::wedge(), MonomialOrder::graded_lex(2), test::wedge_gaps());
    FAIL() << "expected a closure violation";
  } catch (const ClosureViolation& e) {
    EXPECT_EQ(e.gap(), (Point{4, 2}));
    EXPECT_EQ(e.left() + e.right(), (Point{4, 2}));
  }
}

TEST(GapSemigroup, ClosureViolationNamesWitness) {
  try {
    GapSemigroup::numerical({2});
    FAIL() << "expected a closure violation";
  } catch (const ClosureViolation& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ClosureViolation);
    EXPECT_EQ(e.gap(), num(2));
    EXPECT_EQ(e.left(), num(1));
    EXPECT_EQ(e.right(), num(1));
  }
  EXPECT_NO_THROW(GapSemigroup::numerical({1, 2, 4}));
  EXPECT_NO_THROW(GapSemigroup::numerical({1, 3}));
}

TEST(GapSemigroup, RejectsMalformedGaps) {
  EXPECT_THROW(GapSemigroup::numerical({0, 1}), Error);
  const auto skew = test::skew_ambient();
  EXPECT_THROW(GapSemigroup::from_gaps(skew, {Point{1, 0}}), Error);
  EXPECT_THROW(GapSemigroup::from_gaps(skew, {Point{2, 1, 0}}), Error);
}

TEST(GapSemigroup, InvariantsOfRankTwoExample) {
  const auto s = a27();
  EXPECT_EQ(values(s.small_elements()), (std::vector<Coord>{0, 10, 13, 20, 23, 26}));
  EXPECT_EQ(s.frobenius_element(), num(27));
  EXPECT_EQ(s.multiplicity(), num(10));
  EXPECT_EQ(s.ratio(), num(13));
  EXPECT_EQ(s.genus(), 22u);
  EXPECT_EQ(values(s.msg()), (std::vector<Coord>{10, 13, 28, 29, 31, 32, 34, 35, 37}));
  EXPECT_EQ(s.to_string(), "{0,10,13,20,23,26,28,→}");
}

TEST(GapSemigroup, WholeConeHasNoFrobenius) {
  const auto s = GapSemigroup::whole_cone(numerical_ambient());
  EXPECT_FALSE(s.frobenius());
  EXPECT_THROW(s.frobenius_element(), Error);
  EXPECT_EQ(s.multiplicity(), num(1));
  try {
    s.ratio();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPresent);
  }
}

TEST(Msg, Examples) {
  EXPECT_EQ(values(delta13_4().msg()), (std::vector<Coord>{4, 14, 15, 17}));
  EXPECT_EQ(values(GapSemigroup::numerical({1}).msg()), (std::vector<Coord>{2, 3}));
  EXPECT_EQ(GapSemigroup::numerical({1}).embedding_dimension(), 2u);
}

TEST(Apery, NumericalExamples) {
  EXPECT_EQ(values(apery(a27(), num(10)).elements),
            (std::vector<Coord>{0, 13, 26, 28, 29, 31, 32, 34, 35, 37}));
  std::vector<Coord> gaps;
  for (Coord v = 1; v <= 83; ++v) {
    bool in = false;
    for (Coord a = 0; 10 * a <= v && !in; ++a) in = (v - 10 * a) % 14 == 0;
    if (!in) gaps.push_back(v);
  }
  const auto s = GapSemigroup::numerical(gaps);
  EXPECT_EQ(values(apery(s, num(10)).elements),
            (std::vector<Coord>{0, 14, 28, 42, 56, 85, 87, 89, 91, 93}));
  EXPECT_EQ(s.genus(), 54u);
}

TEST(Apery, DeltaIdentity) {
  const auto skew = test::skew_ambient();
  const auto d = GapSemigroup::from_gaps(
      skew, [&] {
        auto pts = enumerate_up_to(skew->cone(), skew->order(), Point{7, 2});
        pts.erase(pts.begin());
        return pts;
      }());
  for (const Point& m : {Point{8, 1}, Point{9, 1}}) {
    std::vector<Point> expected{Point{0, 0}};
    for (const auto& h : d.gaps()) expected.push_back(h + m);
    std::sort(expected.begin(), expected.end(), OrderLess{&skew->order()});
    EXPECT_EQ(apery(d, m).elements, expected) << m.to_string();
  }
}

TEST(Apery, IncrementalUpdate) {
  const auto s = delta13_4();
  EXPECT_EQ(values(apery(s, num(4)).elements), (std::vector<Coord>{0, 14, 15, 17}));
  const auto inc = apery_adjoin(s, num(10), num(4));
  EXPECT_EQ(values(inc.elements), (std::vector<Coord>{0, 10, 15, 17}));
  EXPECT_EQ(inc, apery(adjoin(s, num(10)), num(4)));
}

TEST(PseudoFrobenius, Examples) {
  std::vector<Coord> gaps;
  for (Coord v = 1; v <= 9; ++v) gaps.push_back(v);
  const auto d9 = GapSemigroup::numerical(gaps);
  EXPECT_EQ(values(pseudo_frobenius(d9)), (std::vector<Coord>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_EQ(values(special_gaps(d9)), (std::vector<Coord>{5, 6, 7, 8, 9}));
  EXPECT_EQ(values(pseudo_frobenius(GapSemigroup::numerical({1}))), std::vector<Coord>{1});
  EXPECT_EQ(values(special_gaps(GapSemigroup::numerical({1}))), std::vector<Coord>{1});
  const auto pf = pseudo_frobenius(a27());
  EXPECT_NE(std::find(pf.begin(), pf.end(), num(27)), pf.end());
  EXPECT_EQ(pf, pseudo_frobenius_definitional(a27()));
  EXPECT_THROW(pseudo_frobenius(GapSemigroup::whole_cone(numerical_ambient())), Error);
}

TEST(SpecialGaps, SkewTreeChildren) {
  const auto skew = test::skew_ambient();
  auto pts = enumerate_up_to(skew->cone(), skew->order(), Point{7, 2});
  pts.erase(pts.begin());
  const auto d = GapSemigroup::from_gaps(skew, pts);
  const auto sg = special_gaps(d);
  for (const Point& x : {Point{6, 2}, Point{5, 1}, Point{4, 2}}) {
    EXPECT_NE(std::find(sg.begin(), sg.end(), x), sg.end()) << x.to_string();
    EXPECT_TRUE(is_special_gap(d, x));
  }
  EXPECT_EQ(pseudo_frobenius(d), pseudo_frobenius_definitional(d));
}

TEST(Adjoin, AndRemovals) {
  const auto s1 = adjoin(delta13_4(), num(10));
  EXPECT_EQ(s1.to_string(), "{0,4,8,10,12,14,→}");
  EXPECT_THROW(adjoin(delta13_4(), num(2)), Error);
  EXPECT_THROW(adjoin(delta13_4(), num(4)), Error);

  const auto s = GapSemigroup::numerical({1, 2});
  const auto t = adjoin(s, num(2));
  EXPECT_EQ(remove_multiplicity(t), s);

  const auto g = from_elements(9, {4, 6, 7, 8});  // <4,6,7> ∪ {10,→}
  const auto r = remove_ratio(g);
  EXPECT_EQ(r.genus(), g.genus() + 1);
  EXPECT_TRUE(r.is_gap(num(6)));
  EXPECT_EQ(r, from_elements(9, {4, 7, 8}));
}

TEST(MonoidContains, Basics) {
  EXPECT_TRUE(monoid_contains(nums({10, 13}), num(36)));
  EXPECT_FALSE(monoid_contains(nums({10, 13}), num(27)));
  EXPECT_TRUE(monoid_contains({Point{3, 1}}, Point{9, 3}));
  EXPECT_FALSE(monoid_contains({Point{3, 1}}, Point{7, 2}));
  EXPECT_TRUE(monoid_contains({}, Point{0, 0}));
}
