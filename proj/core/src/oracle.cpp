#include "csg/oracle.hpp"

#include <algorithm>
#include <functional>

#include "csg/errors.hpp"

namespace csg::oracle {
namespace {

// Box scan of {x in C : coordinates <= level, pi_1(x) <= level}.
std::vector<Point> box_points(const Ambient& ambient, Coord level) {
  const std::size_t p = ambient.dim();
  std::vector<Point> out;
  std::vector<Coord> x(p, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == p) {
      Point pt{std::span<const Coord>(x)};
      if (ambient.order().pi1(pt) <= level && ambient.cone().contains(pt)) out.push_back(pt);
      return;
    }
    for (Coord v = 0; v <= level; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

bool passes(const GapSemigroup& s, Filter filter) {
  switch (filter) {
    case Filter::All: return true;
    case Filter::A: return brute_is_A(s);
    case Filter::Arf: return brute_is_arf(s);
    case Filter::Sat: return brute_saturated(s, 10);
    case Filter::MedA: return brute_is_A(s) && brute_is_med(s);
  }
  return false;
}

}  // namespace

std::vector<GapSemigroup> brute_family(Coord f, Filter filter, Coord guard) {
  if (f < 1) throw_input("f must be positive");
  if (f > guard) {
    throw_capability("brute_family guard: f = " + std::to_string(f) + " exceeds " +
                     std::to_string(guard));
  }
  std::vector<char> in(static_cast<std::size_t>(f) + 1, 0);
  in[0] = 1;
  std::vector<GapSemigroup> out;
  auto is_sum = [&](Coord x) {
    for (Coord a = 1; 2 * a <= x; ++a) {
      if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(x - a)]) return true;
    }
    return false;
  };
  std::function<void(Coord)> rec = [&](Coord x) {
    if (x == f) {
      if (is_sum(f)) return;
      std::vector<Point> gaps;
      for (Coord g = 1; g <= f; ++g) {
        if (!in[static_cast<std::size_t>(g)]) gaps.push_back(num(g));
      }
      auto s = GapSemigroup::from_trusted_gaps(numerical_ambient(), std::move(gaps));
      if (passes(s, filter)) out.push_back(std::move(s));
      return;
    }
    const bool forced = is_sum(x);
    for (char choice : {char{0}, char{1}}) {
      if (forced && !choice) continue;
      // x in S with f - x in S would put f in S.
      if (choice && in[static_cast<std::size_t>(f - x)] && f - x <= x) continue;
      if (choice && 2 * x == f) continue;
      in[static_cast<std::size_t>(x)] = choice;
      rec(x + 1);
      in[static_cast<std::size_t>(x)] = 0;
    }
  };
  rec(1);
  return out;
}

std::vector<GapSemigroup> brute_family_2d(const AmbientPtr& ambient, const Point& f, Filter filter,
                                          std::size_t guard) {
  if (filter != Filter::All && filter != Filter::A) {
    throw_capability("brute_family_2d supports the All and A filters");
  }
  const auto& order = ambient->order();
  std::vector<Point> below;
  for (const auto& x : box_points(*ambient, order.pi1(f))) {
    if (!x.is_zero() && !order.less(f, x) && x != f) below.push_back(x);
  }
  if (below.size() + 1 > guard) {
    throw_capability("brute_family_2d guard: " + std::to_string(below.size() + 1) +
                     " candidate points exceed " + std::to_string(guard));
  }
  std::sort(below.begin(), below.end(), OrderLess{&order});
  const std::size_t n = below.size();
  auto index_of = [&](const Point& y) -> std::ptrdiff_t {
    auto it = std::find(below.begin(), below.end(), y);
    return it == below.end() ? -1 : it - below.begin();
  };
  // sums[i][j] = index of below[i] + below[j], -1 if above f, -2 if equal to f.
  std::vector<std::vector<std::ptrdiff_t>> sums(n, std::vector<std::ptrdiff_t>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Point y = below[i] + below[j];
      sums[i][j] = y == f ? -2 : index_of(y);
    }
  }
  std::vector<GapSemigroup> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i; j < n && closed; ++j) {
        if (!(mask >> j & 1)) continue;
        const auto k = sums[i][j];
        if (k == -2 || (k >= 0 && !(mask >> k & 1))) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<Point> gaps{f};
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) gaps.push_back(below[i]);
    }
    auto s = GapSemigroup::from_trusted_gaps(ambient, std::move(gaps));
    if (passes(s, filter)) out.push_back(std::move(s));
  }
  return out;
}

bool brute_is_A(const GapSemigroup& s) {
  if (!s.frobenius()) return true;
  const Point& f = *s.frobenius();
  const auto& order = s.order();
  for (const auto& x : box_points(s.ambient(), order.pi1(f))) {
    if (!order.less(x, f) || !s.contains(x)) continue;
    for (const auto& e : unit_vectors(s.dim())) {
      const Point y = x + e;
      if (order.less(y, f) && s.contains(y)) return false;
    }
  }
  return true;
}

bool brute_is_arf(const GapSemigroup& s) {
  if (s.dim() != 1) throw_precondition("Arf is defined for numerical semigroups only");
  const Coord top = 2 * (s.frobenius() ? (*s.frobenius())[0] : 0) + 2;
  std::vector<Coord> elems;
  for (Coord v = 0; v <= top; ++v) {
    if (s.contains(num(v))) elems.push_back(v);
  }
  for (Coord x : elems) {
    for (Coord y : elems) {
      if (y > x) break;
      for (Coord z : elems) {
        if (z > y) break;
        if (!s.contains(num(x + y - z))) return false;
      }
    }
  }
  return true;
}

bool brute_saturated(const GapSemigroup& s, Coord bound) {
  if (s.dim() != 1) throw_precondition("saturation is defined for numerical semigroups only");
  if (!s.frobenius()) return true;
  const Coord f = (*s.frobenius())[0];
  for (Coord base = 1; base <= f; ++base) {
    if (!s.contains(num(base))) continue;
    std::vector<Coord> below;
    for (Coord v = 1; v <= base; ++v) {
      if (s.contains(num(v))) below.push_back(v);
    }
    Coord span = 0;
    for (Coord v : below) span += bound * v;
    // reach[t + span]: t = sum z_i s_i is attainable with |z_i| <= bound.
    std::vector<char> reach(static_cast<std::size_t>(2 * span + 1), 0);
    reach[static_cast<std::size_t>(span)] = 1;
    for (Coord v : below) {
      std::vector<char> next(reach.size(), 0);
      for (std::size_t t = 0; t < reach.size(); ++t) {
        if (!reach[t]) continue;
        for (Coord z = -bound; z <= bound; ++z) {
          const auto u = static_cast<std::ptrdiff_t>(t) + z * v;
          if (u >= 0 && u < static_cast<std::ptrdiff_t>(next.size())) next[static_cast<std::size_t>(u)] = 1;
        }
      }
      reach = std::move(next);
    }
    for (Coord t = 0; t <= span; ++t) {
      if (reach[static_cast<std::size_t>(t + span)] && !s.contains(num(base + t))) return false;
    }
  }
  return true;
}

std::vector<Point> brute_msg(const GapSemigroup& s) {
  const auto& ambient = s.ambient();
  const Coord f1 = s.frobenius() ? ambient.order().pi1(*s.frobenius()) : 0;
  const Coord level = 2 * (f1 + ambient.hilbert_max()) + 2;
  std::vector<Point> elems;
  for (const auto& x : box_points(ambient, level)) {
    if (!x.is_zero() && s.contains(x)) elems.push_back(x);
  }
  std::vector<Point> out;
  for (const auto& x : elems) {
    bool split = false;
    for (const auto& a : elems) {
      if (a == x || !componentwise_le(a, x)) continue;
      auto rest = checked_sub(x, a);
      if (rest && s.contains(*rest)) {
        split = true;
        break;
      }
    }
    if (!split) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), OrderLess{&s.order()});
  return out;
}

bool brute_is_med(const GapSemigroup& s) {
  if (s.dim() != 1) throw_precondition("MED is defined for numerical semigroups only");
  return static_cast<Coord>(brute_msg(s).size()) == s.multiplicity()[0];
}

std::set<std::vector<Point>> gap_sets(const std::vector<GapSemigroup>& family) {
  std::set<std::vector<Point>> out;
  for (const auto& s : family) out.insert(s.gaps());
  return out;
}

}  // namespace csg::oracle
