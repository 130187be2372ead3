#include <gtest/gtest.h>

#include "csg/classify.hpp"
#include "csg/enumerate.hpp"
#include "csg/errors.hpp"
#include "csg/oracle.hpp"
#include "fixtures.hpp"

using namespace csg;
using test::from_elements;

TEST(Oracle, CountsNumericalSemigroupsByFrobenius) {
  // Numerical semigroups with Frobenius number f, f = 1..15.
  const std::vector<std::size_t> counts{1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40, 106, 103, 200};
  for (Coord f = 1; f <= 15; ++f) {
    EXPECT_EQ(oracle::brute_family(f, oracle::Filter::All).size(), counts[f - 1]) << f;
  }
}

TEST(Oracle, SmallFamilies) {
  const auto one = oracle::brute_family(1, oracle::Filter::All);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].to_string(), "{0,2,→}");
  EXPECT_EQ(oracle::gap_sets(oracle::brute_family(4, oracle::Filter::A)),
            enumerate_A_f(numerical_ambient(), num(4)).gap_sets());
  std::set<std::vector<Point>> med4;
  for (const auto& s : oracle::brute_family(13, oracle::Filter::MedA)) {
    if (s.multiplicity() == num(4)) med4.insert(s.gaps());
  }
  EXPECT_EQ(med4, enumerate_AMED_fm(13, 4).gap_sets());
  EXPECT_EQ(med4.size(), 3u);
}

TEST(Oracle, Guards) {
  try {
    oracle::brute_family(21, oracle::Filter::All);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Capability);
  }
  EXPECT_THROW(oracle::brute_family_2d(test::skew_ambient(), Point{9, 2}), Error);
  EXPECT_THROW(oracle::brute_family_2d(test::skew_ambient(), Point{7, 2}, oracle::Filter::Arf),
               Error);
}

TEST(Oracle, TwoDimensionalMinimal) {
  const auto fam = oracle::brute_family_2d(test::skew_ambient(), Point{2, 1});
  ASSERT_EQ(fam.size(), 1u);
  EXPECT_EQ(fam[0], delta(test::skew_ambient(), Point{2, 1}));
}

TEST(Oracle, Saturated) {
  EXPECT_TRUE(oracle::brute_saturated(delta(numerical_ambient(), num(9)), 10));
  EXPECT_FALSE(oracle::brute_saturated(from_elements(13, {5, 7, 10, 12}), 10));
  EXPECT_TRUE(oracle::brute_saturated(from_elements(13, {4, 8, 10, 12}), 10));
}

TEST(Oracle, Msg) {
  EXPECT_EQ(test::values(oracle::brute_msg(from_elements(13, {4, 8, 12}))),
            (std::vector<Coord>{4, 14, 15, 17}));
  EXPECT_EQ(test::values(oracle::brute_msg(GapSemigroup::numerical({1}))),
            (std::vector<Coord>{2, 3}));
  const auto d = delta(test::skew_ambient(), Point{7, 2});
  EXPECT_EQ(oracle::brute_msg(d), d.msg());
}
