#include "csg/gensys.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "csg/classify.hpp"
#include "csg/enumerate.hpp"
#include "csg/errors.hpp"

namespace csg {
namespace {

[[noreturn]] void not_an_af_set(const std::string& why) {
  throw_infeasible("NOT_AN_AF_SET: " + why);
}

std::string list(const std::vector<Point>& x) { return to_string(std::span<const Point>(x)); }

}  // namespace

ClosureResult closure(const AmbientPtr& ambient, const Point& f, const std::vector<Point>& x) {
  const auto& order = ambient->order();
  const auto base = delta(ambient, f);
  for (const auto& g : x) {
    if (g.dim() != f.dim()) throw_input("element " + g.to_string() + " has the wrong dimension");
    if (!ambient->cone().contains(g)) throw_input(g.to_string() + " is outside the cone");
    if (g.is_zero() || order.less(f, g)) {
      not_an_af_set(g.to_string() + " lies in Δ(" + f.to_string() + ")");
    }
  }

  // <X> below f, by increasing order.
  std::unordered_set<Point, PointHash> generated{Point(f.dim())};
  std::vector<Point> gaps;
  for (const auto& y : base.gaps()) {
    bool in = false;
    for (const auto& g : x) {
      auto rest = checked_sub(y, g);
      if (rest && generated.contains(*rest)) {
        in = true;
        break;
      }
    }
    if (in) {
      if (y == f) not_an_af_set("f = " + f.to_string() + " lies in <" + list(x) + ">");
      generated.insert(y);
    } else {
      gaps.push_back(y);
    }
  }
  auto s = GapSemigroup::from_trusted_gaps(ambient, std::move(gaps));
  if (auto v = is_A(s); !v) {
    not_an_af_set("<" + list(x) + "> has consecutive small elements " + v.witness[0].to_string() +
                  " and " + (v.witness[0] + v.witness[1]).to_string());
  }
  const char* branch = x.empty() ? "empty" : x.size() == 1 ? "rank1" : x.size() == 2 ? "rank2" : "general";
  return {std::move(s), branch};
}

GapSemigroup closure_by_intersection(const AmbientPtr& ambient, const Point& f,
                                     const std::vector<Point>& x) {
  const auto tree = enumerate_A_f(ambient, f);
  std::unordered_set<Point, PointHash> missing;
  bool any = false;
  for (const auto& node : tree.nodes) {
    const auto& s = node.semigroup;
    if (!std::all_of(x.begin(), x.end(), [&](const Point& g) { return s.contains(g); })) continue;
    any = true;
    missing.insert(s.gaps().begin(), s.gaps().end());
  }
  if (!any) not_an_af_set("no member of A(" + f.to_string() + ") contains " + list(x));
  return GapSemigroup::from_trusted_gaps(ambient, {missing.begin(), missing.end()});
}

std::vector<Point> a_msg(const GapSemigroup& s) {
  if (!s.frobenius() || !is_A(s)) {
    throw_precondition("S is not an A-semigroup with a Frobenius element");
  }
  auto gens = s.msg();
  const Point& f = *s.frobenius();
  std::erase_if(gens, [&](const Point& g) { return !s.order().less(g, f); });
  return gens;
}

std::size_t a_rank(const GapSemigroup& s) { return a_msg(s).size(); }

Coord rank1_genus(Coord f, Coord m) {
  if (m < 2 || m >= f || f % m == 0) {
    throw_infeasible("no rank-one member of A(" + std::to_string(f) + ") has multiplicity " +
                     std::to_string(m));
  }
  return f - f / m;
}

Rank2Report rank2_feasible_numerical(Coord m, Coord r, Coord f) {
  std::string bad;
  if (m < 3) bad += " m >= 3;";
  if (!(m < r && r < f)) bad += " m < r < f;";
  if (r % m == 0) bad += " r not in <m>;";
  if (bad.empty() && monoid_contains({num(m), num(r)}, num(f))) bad += " f not in <m, r>;";
  if (!bad.empty()) throw_precondition("rank-two hypotheses violated:" + bad);

  Rank2Report report;
  report.coprime = std::gcd(m, r) == 1;
  if (report.coprime) {
    report.x_set = {0, m};
    for (Coord lambda = 1; lambda <= (f - 1) / r; ++lambda) report.x_set.push_back(lambda * r % m);
    std::sort(report.x_set.begin(), report.x_set.end());
    report.x_set.erase(std::unique(report.x_set.begin(), report.x_set.end()), report.x_set.end());
    report.feasible = true;
    for (std::size_t i = 1; i < report.x_set.size(); ++i) {
      if (report.x_set[i] == report.x_set[i - 1] + 1) report.feasible = false;
    }
    return report;
  }
  const std::vector<Point> gens{num(m), num(r)};
  bool prev = true;  // 0 is in <m, r>
  for (Coord v = 1; v < f; ++v) {
    const bool cur = monoid_contains(gens, num(v));
    if (cur && prev) {
      report.witness = {v - 1, v};
      return report;
    }
    prev = cur;
  }
  report.feasible = true;
  return report;
}

AperySet rank2_apery(Coord m, Coord r, Coord f) {
  const auto report = rank2_feasible_numerical(m, r, f);
  if (!report.feasible) {
    throw_infeasible("<" + std::to_string(m) + "," + std::to_string(r) + "> ∪ {" +
                     std::to_string(f + 1) + ",→} is not an A-semigroup of rank two");
  }
  Coord l = 0;
  if (report.coprime) {
    l = (f - 1) / r;
  } else {
    const Coord d = std::gcd(m, r);
    for (Coord k = 1; k <= m / d - 1; ++k) {
      if (k * r < f) l = k;
    }
  }
  std::vector<Coord> elements;
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (Coord lambda = 0; lambda <= l; ++lambda) {
    elements.push_back(lambda * r);
    used[static_cast<std::size_t>(lambda * r % m)] = true;
  }
  for (Coord i = 1; i <= m; ++i) {
    if (!used[static_cast<std::size_t>((f + i) % m)]) elements.push_back(f + i);
  }
  std::sort(elements.begin(), elements.end());
  AperySet ap{num(m), {}};
  for (Coord e : elements) ap.elements.push_back(num(e));
  return ap;
}

bool pair_generates_csemigroup(const Cone& cone, const Point& m, const Point& r) {
  switch (cone.dim()) {
    case 1: return std::gcd(m[0], r[0]) == 1;
    case 2: break;
    default: return false;
  }
  const auto& rays = cone.rays();
  if (!((m == rays[0] && r == rays[1]) || (m == rays[1] && r == rays[0]))) return false;
  const Point& a = rays[0];
  const Point& b = rays[1];
  const Coord det = a[0] * b[1] - a[1] * b[0];
  // Lattice points of the closed parallelogram 0, a, b, a + b.
  std::size_t count = 0;
  for (Coord x = 0; x <= a[0] + b[0]; ++x) {
    for (Coord y = 0; y <= a[1] + b[1]; ++y) {
      const Coord la = x * b[1] - y * b[0];   // det * lambda_a
      const Coord lb = a[0] * y - a[1] * x;   // det * lambda_b
      auto inside = [&](Coord v) { return det > 0 ? (v >= 0 && v <= det) : (v <= 0 && v >= det); };
      if (inside(la) && inside(lb)) ++count;
    }
  }
  return count == 4;
}

}  // namespace csg
