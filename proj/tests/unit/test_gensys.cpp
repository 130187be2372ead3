#include <gtest/gtest.h>

#include "csg/errors.hpp"
#include "csg/gensys.hpp"
#include "fixtures.hpp"

using namespace csg;
using test::from_elements;
using test::nums;
using test::values;

TEST(Closure, NumericalExamples) {
  const auto amb = numerical_ambient();
  const auto r1 = closure(amb, num(14), nums({5}));
  EXPECT_EQ(r1.semigroup.to_string(), "{0,5,10,15,→}");
  EXPECT_EQ(r1.branch, "rank1");
  EXPECT_EQ(r1.semigroup.genus(), 12u);

  const auto r2 = closure(amb, num(27), nums({10, 13}));
  EXPECT_EQ(r2.semigroup, from_elements(27, {10, 13, 20, 23, 26}));
  EXPECT_EQ(r2.branch, "rank2");

  const auto r0 = closure(amb, num(9), {});
  EXPECT_EQ(r0.semigroup, delta(amb, num(9)));
  EXPECT_EQ(r0.branch, "empty");
}

TEST(Closure, RejectsNonAfSets) {
  const auto amb = numerical_ambient();
  for (const auto& x : {nums({10, 11}), nums({3}), nums({4, 9}), nums({15})}) {
    try {
      closure(amb, num(12), x);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
      EXPECT_NE(std::string(e.what()).find("NOT_AN_AF_SET"), std::string::npos);
    }
  }
}

TEST(Closure, AgreesWithIntersection) {
  const auto amb = numerical_ambient();
  for (const auto& x : {nums({}), nums({5}), nums({4, 10}), nums({5, 7}), nums({6, 9})}) {
    EXPECT_EQ(closure(amb, num(13), x).semigroup, closure_by_intersection(amb, num(13), x));
  }
  const auto skew = test::skew_ambient();
  const std::vector<Point> x{{3, 1}};
  EXPECT_EQ(closure(skew, Point{7, 2}, x).semigroup, closure_by_intersection(skew, Point{7, 2}, x));
  EXPECT_THROW(closure_by_intersection(amb, num(13), nums({4, 5})), Error);
}

TEST(AMsg, Examples) {
  const auto amb = numerical_ambient();
  EXPECT_TRUE(a_msg(delta(amb, num(9))).empty());
  EXPECT_EQ(a_rank(delta(amb, num(9))), 0u);
  EXPECT_EQ(values(a_msg(from_elements(14, {5, 10}))), std::vector<Coord>{5});
  EXPECT_EQ(a_rank(from_elements(14, {5, 10})), 1u);
  const auto s = from_elements(27, {10, 13, 20, 23, 26});
  EXPECT_EQ(values(a_msg(s)), (std::vector<Coord>{10, 13}));
  EXPECT_EQ(a_rank(s), 2u);
}

TEST(Rank1Genus, Examples) {
  EXPECT_EQ(rank1_genus(14, 5), 12);
  EXPECT_EQ(rank1_genus(3, 2), 2);
  EXPECT_THROW(rank1_genus(12, 4), Error);
  EXPECT_THROW(rank1_genus(5, 7), Error);
  const auto amb = numerical_ambient();
  for (Coord f = 3; f <= 30; ++f) {
    for (Coord m = 2; m < f; ++m) {
      if (f % m == 0) continue;
      EXPECT_EQ(rank1_genus(f, m),
                static_cast<Coord>(closure(amb, num(f), nums({m})).semigroup.genus()));
    }
  }
}

TEST(Rank2, CoprimeExamples) {
  const auto ok = rank2_feasible_numerical(10, 13, 27);
  EXPECT_TRUE(ok.feasible);
  EXPECT_TRUE(ok.coprime);
  EXPECT_EQ(ok.x_set, (std::vector<Coord>{0, 3, 6, 10}));
  const auto bad = rank2_feasible_numerical(7, 11, 27);
  EXPECT_FALSE(bad.feasible);
  EXPECT_EQ(bad.x_set, (std::vector<Coord>{0, 1, 4, 7}));
}

TEST(Rank2, NonCoprimeExample) {
  const auto r = rank2_feasible_numerical(10, 14, 83);
  EXPECT_TRUE(r.feasible);
  EXPECT_FALSE(r.coprime);
  const auto s = closure(numerical_ambient(), num(83), nums({10, 14})).semigroup;
  EXPECT_EQ(s.genus(), 54u);
  const auto ap = rank2_apery(10, 14, 83);
  EXPECT_EQ(values(ap.elements), (std::vector<Coord>{0, 14, 28, 42, 56, 85, 87, 89, 91, 93}));
  Coord sum = 0;
  for (const auto& w : ap.elements) sum += w[0];
  EXPECT_EQ(2 * sum - 10 * 9, 2 * 10 * 54);
  EXPECT_TRUE(rank2_feasible_numerical(4, 6, 13).feasible);
  EXPECT_THROW(rank2_feasible_numerical(4, 6, 14), Error);
  EXPECT_THROW(rank2_feasible_numerical(2, 5, 13), Error);
  EXPECT_THROW(rank2_feasible_numerical(4, 8, 13), Error);
}

TEST(Rank2, AperyMatchesDirect) {
  EXPECT_EQ(values(rank2_apery(10, 13, 27).elements),
            (std::vector<Coord>{0, 13, 26, 28, 29, 31, 32, 34, 35, 37}));
  const auto amb = numerical_ambient();
  for (Coord f = 5; f <= 40; ++f) {
    for (Coord m = 3; m < f; ++m) {
      for (Coord r = m + 1; r < f; ++r) {
        if (f % m == 0 || r % m == 0 || monoid_contains(nums({m, r}), num(f))) continue;
        if (!rank2_feasible_numerical(m, r, f).feasible) continue;
        const auto s = closure(amb, num(f), nums({m, r})).semigroup;
        EXPECT_EQ(rank2_apery(m, r, f), apery(s, num(m))) << m << "," << r << "," << f;
        EXPECT_EQ(a_rank(s), 2u);
      }
    }
  }
}

TEST(Rank2, FeasibilityMatchesClosure) {
  const auto amb = numerical_ambient();
  for (Coord f = 5; f <= 30; ++f) {
    for (Coord m = 3; m < f; ++m) {
      for (Coord r = m + 1; r < f; ++r) {
        if (f % m == 0 || r % m == 0 || monoid_contains(nums({m, r}), num(f))) continue;
        bool closes = true;
        try {
          closes = closure(amb, num(f), nums({m, r})).semigroup.multiplicity() == num(m);
        } catch (const Error&) {
          closes = false;
        }
        EXPECT_EQ(rank2_feasible_numerical(m, r, f).feasible, closes) << m << "," << r << "," << f;
      }
    }
  }
}

TEST(PairGenerates, Examples) {
  EXPECT_TRUE(pair_generates_csemigroup(Cone::numerical(), num(10), num(13)));
  EXPECT_FALSE(pair_generates_csemigroup(Cone::numerical(), num(10), num(14)));
  EXPECT_TRUE(pair_generates_csemigroup(Cone::orthant(2), Point{1, 0}, Point{0, 1}));
  EXPECT_FALSE(pair_generates_csemigroup(Cone::orthant(2), Point{2, 0}, Point{0, 1}));
  EXPECT_FALSE(pair_generates_csemigroup(Cone({Point{12, 1}, Point{7, 4}}), Point{12, 1},
                                         Point{7, 4}));
  EXPECT_FALSE(pair_generates_csemigroup(Cone::orthant(3), Point{1, 0, 0}, Point{0, 1, 0}));
}
