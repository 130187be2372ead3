#include <gtest/gtest.h>

#include <random>

#include "csg/classify.hpp"
#include "csg/enumerate.hpp"
#include "csg/errors.hpp"
#include "csg/gensys.hpp"
#include "csg/oracle.hpp"
#include "fixtures.hpp"

using namespace csg;

namespace {

std::vector<GapSemigroup> all_numerical(Coord max_f) {
  std::vector<GapSemigroup> out;
  for (Coord f = 1; f <= max_f; ++f) {
    for (auto& s : oracle::brute_family(f, oracle::Filter::All)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<GapSemigroup> skew_family() {
  const auto tree = enumerate_A_f(test::skew_ambient(), Point{7, 2});
  std::vector<GapSemigroup> out;
  for (const auto& n : tree.nodes) out.push_back(n.semigroup);
  for (auto& s : oracle::brute_family_2d(test::skew_ambient(), Point{7, 2}, oracle::Filter::All)) {
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST(Properties, AlgorithmOneMatchesOracle) {
  for (Coord f = 1; f <= 12; ++f) {
    EXPECT_EQ(enumerate_A_f(numerical_ambient(), num(f)).gap_sets(),
              oracle::gap_sets(oracle::brute_family(f, oracle::Filter::A)))
        << f;
  }
}

TEST(Properties, AlgorithmTwoMatchesMultiplicitySlices) {
  for (Coord f = 2; f <= 12; ++f) {
    const auto family = oracle::brute_family(f, oracle::Filter::A);
    for (const auto& m : m_set(numerical_ambient(), num(f))) {
      std::set<std::vector<Point>> slice;
      for (const auto& s : family) {
        if (s.multiplicity() == m) slice.insert(s.gaps());
      }
      if (f % m[0] == 0) {
        EXPECT_TRUE(slice.empty());
        EXPECT_THROW(enumerate_A_fm(numerical_ambient(), num(f), m), Error);
        continue;
      }
      const auto tree = enumerate_A_fm(numerical_ambient(), num(f), m);
      EXPECT_EQ(tree.gap_sets(), slice) << f << "," << m[0];
      EXPECT_EQ(enumerate_A_fm(numerical_ambient(), num(f), m, {1, true}).gap_sets(), slice);
    }
  }
}

TEST(Properties, IsAMatchesDefinition) {
  for (const auto& s : all_numerical(11)) {
    EXPECT_EQ(bool(is_A(s)), oracle::brute_is_A(s)) << s.to_string();
    const auto b = s.multiplicity()[0];
    EXPECT_EQ(bool(residue_A_check(s, b)), bool(is_A(s))) << s.to_string();
    EXPECT_EQ(bool(residue_A_check(s, s.frobenius_element()[0] + 1)), bool(is_A(s)));
    const auto& f = s.frobenius_element();
    if (s.order().less(s.multiplicity() + s.multiplicity(), f)) {
      EXPECT_EQ(bool(is_A_upsilon(s)), bool(is_A(s))) << s.to_string();
    }
  }
  for (const auto& s : skew_family()) {
    EXPECT_EQ(bool(is_A(s)), oracle::brute_is_A(s));
  }
}

TEST(Properties, NumericalPredicatesMatchDefinitions) {
  for (const auto& s : all_numerical(12)) {
    EXPECT_EQ(bool(is_arf(s)), oracle::brute_is_arf(s)) << s.to_string();
    EXPECT_EQ(bool(is_MED(s)), oracle::brute_is_med(s)) << s.to_string();
    if (is_saturated(s)) {
      EXPECT_TRUE(is_arf(s));
    }
    if (is_arf(s)) {
      EXPECT_TRUE(is_A(s));
    }
    // MED iff msg = (Ap(S,m) \ {0}) ∪ {m}.
    auto ap = apery(s, s.multiplicity()).elements;
    ap.erase(ap.begin());
    ap.insert(ap.begin(), s.multiplicity());
    std::sort(ap.begin(), ap.end());
    EXPECT_EQ(bool(is_MED(s)), s.msg() == ap);
  }
}

TEST(Properties, SaturatedMatchesBoundedDefinition) {
  for (const auto& s : all_numerical(10)) {
    EXPECT_EQ(bool(is_saturated(s)), oracle::brute_saturated(s, 6)) << s.to_string();
  }
}

TEST(Properties, AperyAndGenusFormula) {
  for (const auto& s : all_numerical(11)) {
    for (Coord b = 1; b <= 14; ++b) {
      if (!s.contains(num(b))) continue;
      const auto ap = apery(s, num(b)).elements;
      ASSERT_EQ(static_cast<Coord>(ap.size()), b);
      std::set<Coord> residues;
      Coord sum = 0;
      for (const auto& w : ap) {
        residues.insert(w[0] % b);
        sum += w[0];
      }
      EXPECT_EQ(static_cast<Coord>(residues.size()), b);
      EXPECT_EQ(2 * sum - b * (b - 1), 2 * b * static_cast<Coord>(s.genus()));
    }
  }
}

TEST(Properties, PseudoFrobeniusAndSpecialGaps) {
  auto family = all_numerical(10);
  for (auto& s : skew_family()) family.push_back(std::move(s));
  for (const auto& s : family) {
    EXPECT_EQ(pseudo_frobenius(s), pseudo_frobenius_definitional(s)) << s.to_string();
    const auto sg = special_gaps(s);
    for (const auto& g : s.gaps()) {
      const bool special = std::find(sg.begin(), sg.end(), g) != sg.end();
      EXPECT_EQ(is_special_gap(s, g), special);
      if (special) {
        std::vector<Point> rest;
        for (const auto& h : s.gaps()) {
          if (h != g) rest.push_back(h);
        }
        EXPECT_EQ(GapSemigroup::from_gaps(s.ambient_ptr(), rest), adjoin(s, g));
      } else {
        EXPECT_THROW(adjoin(s, g), Error);
      }
    }
  }
}

TEST(Properties, MsgMatchesOracle) {
  auto family = all_numerical(10);
  for (auto& s : skew_family()) family.push_back(std::move(s));
  for (const auto& s : family) {
    EXPECT_EQ(s.msg(), oracle::brute_msg(s)) << s.to_string();
  }
}

TEST(Properties, IncrementalApery) {
  std::mt19937 rng(20261016);
  const auto family = all_numerical(13);
  std::size_t checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto& s = family[rng() % family.size()];
    const auto sg = special_gaps(s);
    const auto& x = sg[rng() % sg.size()];
    const Coord b = s.multiplicity()[0] + static_cast<Coord>(rng() % 6);
    if (!s.contains(num(b))) continue;
    const auto before = apery(s, num(b)).elements;
    const auto after = apery(adjoin(s, x), num(b)).elements;
    std::vector<Point> bound{x};
    for (const auto& w : before) {
      if (w != x + num(b)) bound.push_back(w);
    }
    for (const auto& w : after) {
      EXPECT_NE(std::find(bound.begin(), bound.end(), w), bound.end());
    }
    EXPECT_EQ(apery_adjoin(s, x, num(b)).elements, after);
    if (x[0] > b && s.is_gap(num(x[0] - b))) {
      std::sort(bound.begin(), bound.end());
      EXPECT_EQ(after, bound);
    }
    ++checked;
  }
  EXPECT_GT(checked, 200u);
}

TEST(Properties, GeneratorSystemRoundTrip) {
  for (Coord f = 1; f <= 11; ++f) {
    const auto amb = numerical_ambient();
    for (const auto& n : enumerate_A_f(amb, num(f)).nodes) {
      const auto& s = n.semigroup;
      const auto x = a_msg(s);
      EXPECT_EQ(closure(amb, num(f), x).semigroup, s);
      EXPECT_LE(x.size(), s.embedding_dimension());
      if (!x.empty()) {
        EXPECT_EQ(x.front(), s.multiplicity());
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto fewer = x;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        EXPECT_LT(closure(amb, num(f), fewer).semigroup.small_elements().size(),
                  s.small_elements().size());
      }
      if (x.size() == 1) {
        std::vector<Point> expected;
        for (Coord k = 0; k * x[0][0] < f; ++k) expected.push_back(num(k * x[0][0]));
        EXPECT_EQ(s.small_elements(), expected);
      }
    }
  }
}

TEST(Properties, RootIsContainedInEveryNode) {
  const auto tree = enumerate_A_fm(test::skew_ambient(), Point{9, 2}, Point{2, 1});
  for (const auto& n : tree.nodes) {
    for (const auto& g : n.semigroup.gaps()) EXPECT_TRUE(tree.root().is_gap(g));
    EXPECT_EQ(n.semigroup.multiplicity(), (Point{2, 1}));
    EXPECT_TRUE(is_A(n.semigroup));
  }
}
