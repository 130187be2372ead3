#include "csg/classify.hpp"

#include <algorithm>
#include <numeric>

#include "csg/errors.hpp"

namespace csg {
namespace {

void require_numerical(const GapSemigroup& s, const char* what) {
  if (s.dim() != 1) throw_precondition(std::string(what) + " is defined for numerical semigroups only");
}

Verdict pass() { return {true, {}}; }
Verdict fail(std::vector<Point> witness) { return {false, std::move(witness)}; }

}  // namespace

Verdict is_A(const GapSemigroup& s) {
  const auto& small = s.small_elements();
  const auto& order = s.order();
  for (const auto& x : small) {
    for (const auto& e : unit_vectors(s.dim())) {
      const Point y = x + e;
      if (std::binary_search(small.begin(), small.end(), y, OrderLess{&order})) return fail({x, e});
    }
  }
  return pass();
}

UpsilonContext upsilon_window(const Ambient& ambient, const Point& f, const Point& m) {
  const auto& order = ambient.order();
  UpsilonContext ctx{f, m, Point(f.dim()), 0, {}};
  const auto units = unit_vectors(f.dim());
  Coord best = 0;
  for (const auto& e : units) best = std::max(best, order.pi1(e));
  bool have = false;
  for (const auto& e : units) {
    if (order.pi1(e) == best && (!have || order.less(e, ctx.ebar))) {
      ctx.ebar = e;
      have = true;
    }
  }
  std::vector<Coord> diff(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) diff[i] = f[i] - m[i] - ctx.ebar[i];
  ctx.threshold = order.pi1(std::span<const Coord>(diff));

  if (f.dim() == 1) {
    for (Coord x = f[0] - m[0] + 1; x < f[0]; ++x) {
      if (x > 0) ctx.upsilon.push_back(num(x));
    }
    return ctx;
  }
  for (const auto& x : points_up_to_level(ambient.cone(), order, order.pi1(f))) {
    if (order.less(x, f) && order.pi1(x) > ctx.threshold) ctx.upsilon.push_back(x);
  }
  return ctx;
}

Verdict is_A_upsilon(const GapSemigroup& s) {
  const Point& f = s.frobenius_element();
  const Point& m = s.multiplicity();
  if (!s.order().less(m.scaled(2), f)) {
    throw_capability("the window criterion needs Fb(S) > 2 m(S); got Fb = " + f.to_string() +
                     ", m = " + m.to_string());
  }
  const auto ctx = upsilon_window(s.ambient(), f, m);
  const auto& order = s.order();
  const auto units = unit_vectors(s.dim());
  auto in_window = [&](const Point& y) {
    return std::binary_search(ctx.upsilon.begin(), ctx.upsilon.end(), y, OrderLess{&order});
  };
  // C1
  for (const auto& x : ctx.upsilon) {
    if (!s.contains(x)) continue;
    for (const auto& e : units) {
      const Point y = x + e;
      if (in_window(y) && s.contains(y)) return fail({x, e});
    }
  }
  // C2
  if (ctx.threshold >= 0) {
    for (const auto& y : points_at_level(s.cone(), order, ctx.threshold)) {
      if (!s.contains(y)) continue;
      for (const auto& e : units) {
        if (s.contains(y + e)) return fail({y, e});
      }
    }
  }
  return pass();
}

ResidueReport residue_A_check(const GapSemigroup& s, Coord b) {
  require_numerical(s, "residue_A_check");
  if (b <= 0 || !s.contains(num(b))) {
    throw_precondition("residue base " + std::to_string(b) + " is not a nonzero element of S");
  }
  ResidueReport report;
  report.x_set.push_back(0);
  if (s.frobenius()) {
    const Coord f = (*s.frobenius())[0];
    std::vector<Coord> w(static_cast<std::size_t>(b), -1);
    for (const auto& a : apery(s, num(b)).elements) w[static_cast<std::size_t>(a[0] % b)] = a[0];
    for (Coord i = 1; i < b; ++i) {
      if (w[static_cast<std::size_t>(i)] < f) report.x_set.push_back(i);
    }
  } else {
    report.value = true;
    report.x_set.push_back(b);
    return report;
  }
  report.x_set.push_back(b);
  report.value = true;
  for (std::size_t i = 1; i < report.x_set.size(); ++i) {
    if (report.x_set[i] == report.x_set[i - 1] + 1) report.value = false;
  }
  return report;
}

Verdict is_MED(const GapSemigroup& s) {
  require_numerical(s, "is_MED");
  auto gens = s.msg();
  if (static_cast<Coord>(gens.size()) == s.multiplicity()[0]) return pass();
  return fail(std::move(gens));
}

Verdict is_arf(const GapSemigroup& s) {
  require_numerical(s, "is_arf");
  const auto& small = s.small_elements();
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t k = 0; k <= j; ++k) {
        const Coord v = small[i][0] + small[j][0] - small[k][0];
        if (!s.contains(num(v))) return fail({small[i], small[j], small[k]});
      }
    }
  }
  return pass();
}

Verdict is_saturated(const GapSemigroup& s) {
  require_numerical(s, "is_saturated");
  const auto& small = s.small_elements();
  Coord g = 0;
  for (std::size_t i = 1; i < small.size(); ++i) {
    g = std::gcd(g, small[i][0]);
    if (!s.contains(num(small[i][0] + g))) return fail({small[i]});
  }
  return pass();
}

}  // namespace csg
