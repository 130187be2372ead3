#include "csg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "csg/errors.hpp"

namespace csg {
namespace {

using Child = std::pair<Point, GapSemigroup>;
using ChildRule = std::function<std::vector<Child>(const GapSemigroup&)>;

// Level-synchronous breadth-first growth. Children of each frontier node are
// computed independently (possibly on several threads) and appended in
// frontier order, so the result does not depend on scheduling.
SemigroupTree grow(Family family, GapSemigroup root, const ChildRule& rule, std::size_t workers) {
  SemigroupTree tree{family, {}};
  tree.nodes.push_back(TreeNode{std::move(root), std::nullopt, std::nullopt, 0});
  std::vector<std::size_t> frontier{0};
  workers = std::max<std::size_t>(1, workers);

  while (!frontier.empty()) {
    std::vector<std::vector<Child>> found(frontier.size());
    auto work = [&](std::size_t i) { found[i] = rule(tree.nodes[frontier[i]].semigroup); };
    if (workers == 1 || frontier.size() == 1) {
      for (std::size_t i = 0; i < frontier.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < std::min(workers, frontier.size()); ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < frontier.size(); i = next++) work(i);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    std::vector<std::size_t> next_frontier;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::size_t parent = frontier[i];
      const std::size_t depth = tree.nodes[parent].depth + 1;
      for (auto& [x, child] : found[i]) {
        next_frontier.push_back(tree.nodes.size());
        tree.nodes.push_back(TreeNode{std::move(child), parent, x, depth});
      }
    }
    frontier = std::move(next_frontier);
  }
  return tree;
}

bool has_neighbor_in(const GapSemigroup& t, const Point& x, bool both_sides) {
  const auto& small = t.small_elements();
  const auto& order = t.order();
  auto in_small = [&](const Point& y) {
    return std::binary_search(small.begin(), small.end(), y, OrderLess{&order});
  };
  for (const auto& e : unit_vectors(t.dim())) {
    if (in_small(x + e)) return true;
    if (both_sides) {
      if (auto below = checked_sub(x, e); below && in_small(*below)) return true;
    }
  }
  return false;
}

bool is_unit(const Point& x) {
  return x.degree() == 1;
}

bool in_sorted(const std::vector<Point>& v, const Point& x, const MonomialOrder& order) {
  return std::binary_search(v.begin(), v.end(), x, OrderLess{&order});
}

void require_nonzero_cone_point(const AmbientPtr& ambient, const Point& x, const char* name) {
  if (x.dim() != ambient->dim()) {
    throw_input(std::string(name) + " = " + x.to_string() + " has the wrong dimension");
  }
  if (x.is_zero() || !ambient->cone().contains(x)) {
    throw_input(std::string(name) + " = " + x.to_string() + " must be a nonzero element of the cone");
  }
}

void require_feasible_m(const AmbientPtr& ambient, const Point& f, const Point& m) {
  require_nonzero_cone_point(ambient, f, "f");
  require_nonzero_cone_point(ambient, m, "m");
  if (!in_m_set(ambient, f, m)) {
    throw_precondition("m = " + m.to_string() + " is not in M(" + f.to_string() + ")");
  }
  if (is_multiple_of(f, m)) {
    throw_infeasible("f = " + f.to_string() + " lies in <" + m.to_string() + ">, so A(f,m) is empty");
  }
}

// Ratio-tree children shared by Algorithms 2 and 3.
std::vector<Child> ratio_children(const GapSemigroup& t, const Point& f,
                                  const std::vector<Point>* window) {
  const auto& order = t.order();
  const Point& m = t.multiplicity();
  const Point r = t.ratio();
  std::vector<Child> out;
  for (const auto& x : t.gaps()) {
    if (!order.less(m, x)) continue;
    if (!order.less(x, r)) break;
    if (x == f) continue;
    if (window && in_sorted(*window, x, order)) continue;
    if (has_neighbor_in(t, x, true) || !is_special_gap(t, x)) continue;
    out.emplace_back(x, adjoin(t, x));
  }
  return out;
}

GapSemigroup numerical_delta(Coord f) { return delta(numerical_ambient(), num(f)); }

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::A_f: return "A_f";
    case Family::A_fm: return "A_fm";
    case Family::A_fmB: return "A_fmB";
    case Family::AMED_fm: return "AMED_fm";
    case Family::Arf_f: return "Arf_f";
    case Family::Sat_f: return "Sat_f";
  }
  return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
  static const std::pair<const char*, Family> names[] = {
      {"af", Family::A_f},        {"A_f", Family::A_f},         {"afm", Family::A_fm},
      {"A_fm", Family::A_fm},     {"afmb", Family::A_fmB},      {"A_fmB", Family::A_fmB},
      {"amed", Family::AMED_fm},  {"AMED_fm", Family::AMED_fm}, {"arf", Family::Arf_f},
      {"Arf_f", Family::Arf_f},   {"sat", Family::Sat_f},       {"Sat_f", Family::Sat_f},
  };
  for (const auto& [n, fam] : names) {
    if (name == n) return fam;
  }
  return std::nullopt;
}

bool is_ratio_family(Family family) {
  return family == Family::A_fm || family == Family::A_fmB || family == Family::AMED_fm;
}

std::set<std::vector<Point>> SemigroupTree::gap_sets() const {
  std::set<std::vector<Point>> out;
  for (const auto& n : nodes) out.insert(n.semigroup.gaps());
  return out;
}

GapSemigroup delta(const AmbientPtr& ambient, const Point& f) {
  require_nonzero_cone_point(ambient, f, "f");
  auto gaps = enumerate_up_to(ambient->cone(), ambient->order(), f);
  gaps.erase(gaps.begin());
  return GapSemigroup::from_trusted_gaps(ambient, std::move(gaps));
}

GapSemigroup delta(const Cone& cone, const MonomialOrder& order, const Point& f) {
  return delta(make_ambient(cone, order), f);
}

std::vector<Point> m_set(const AmbientPtr& ambient, const Point& f) {
  require_nonzero_cone_point(ambient, f, "f");
  auto out = enumerate_up_to(ambient->cone(), ambient->order(), f);
  out.erase(out.begin());
  out.pop_back();
  // A numerical semigroup containing 1 is all of N.
  if (ambient->dim() == 1 && !out.empty()) out.erase(out.begin());
  out.push_back(successor(ambient->order(), ambient->cone(), f));
  return out;
}

bool in_m_set(const AmbientPtr& ambient, const Point& f, const Point& m) {
  if (m.is_zero() || !ambient->cone().contains(m) || m == f) return false;
  if (ambient->dim() == 1 && m[0] == 1) return false;
  const auto& order = ambient->order();
  return order.less(m, f) || m == successor(order, ambient->cone(), f);
}

GapSemigroup delta_fm(const AmbientPtr& ambient, const Point& f, const Point& m) {
  require_feasible_m(ambient, f, m);
  auto gaps = delta(ambient, f).gaps();
  std::erase_if(gaps, [&](const Point& g) { return is_multiple_of(g, m); });
  return GapSemigroup::from_trusted_gaps(ambient, std::move(gaps));
}

SemigroupTree enumerate_A_f(const AmbientPtr& ambient, const Point& f,
                            const EnumerateOptions& options) {
  const Point ff = f;
  auto rule = [ff](const GapSemigroup& t) {
    const auto& order = t.order();
    std::vector<Child> out;
    for (const auto& x : t.gaps()) {
      if (!order.less(x, t.multiplicity())) break;
      if (x == ff || is_unit(x)) continue;
      if (has_neighbor_in(t, x, false) || !is_special_gap(t, x)) continue;
      out.emplace_back(x, adjoin(t, x));
    }
    return out;
  };
  return grow(Family::A_f, delta(ambient, f), rule, options.workers);
}

SemigroupTree enumerate_A_fm(const AmbientPtr& ambient, const Point& f, const Point& m,
                             const EnumerateOptions& options) {
  require_feasible_m(ambient, f, m);
  const auto& order = ambient->order();
  GapSemigroup root = delta_fm(ambient, f, m);
  const Point ff = f;

  if (order.less(f, m.scaled(2)) && !options.force_tree) {
    if (order.less(f, m)) return SemigroupTree{Family::A_fm, {TreeNode{root, {}, {}, 0}}};
    // I(f,m) = {x : m <= x < f}. Members are {m} ∪ A ∪ Δ(f) with A free of
    // consecutive pairs and of m + e; every such union is closed since all
    // sums exceed 2m > f.
    const auto interval = [&] {
      auto pts = enumerate_up_to(ambient->cone(), order, f);
      std::erase_if(pts, [&](const Point& x) { return order.less(x, m) || x == f; });
      return pts;
    }();
    auto rule = [&, ff](const GapSemigroup& t) {
      std::vector<Child> out;
      const Point r = t.ratio();
      for (const auto& x : interval) {
        if (!order.less(m, x)) continue;
        if (!order.less(x, r)) break;
        if (has_neighbor_in(t, x, true)) continue;
        out.emplace_back(x, adjoin(t, x));
      }
      return out;
    };
    return grow(Family::A_fm, std::move(root), rule, options.workers);
  }

  auto rule = [ff](const GapSemigroup& t) { return ratio_children(t, ff, nullptr); };
  return grow(Family::A_fm, std::move(root), rule, options.workers);
}

UpsilonContext upsilon_context(const AmbientPtr& ambient, const Point& f, const Point& m) {
  require_nonzero_cone_point(ambient, f, "f");
  require_nonzero_cone_point(ambient, m, "m");
  if (!ambient->order().less(m.scaled(2), f)) {
    throw_capability("the window Υ needs f > 2m; got f = " + f.to_string() +
                     ", m = " + m.to_string());
  }
  return upsilon_window(*ambient, f, m);
}

namespace {

// Pairs {x, x+e} inside Υ, as index pairs into ctx.upsilon.
std::vector<std::pair<std::size_t, std::size_t>> window_pairs(const AmbientPtr& ambient,
                                                              const UpsilonContext& ctx) {
  const auto& order = ambient->order();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ctx.upsilon.size(); ++i) {
    for (const auto& e : unit_vectors(ctx.f.dim())) {
      const Point y = ctx.upsilon[i] + e;
      auto it = std::lower_bound(ctx.upsilon.begin(), ctx.upsilon.end(), y, OrderLess{&order});
      if (it != ctx.upsilon.end() && *it == y) {
        pairs.emplace_back(i, static_cast<std::size_t>(it - ctx.upsilon.begin()));
      }
    }
  }
  return pairs;
}

bool generated_conditions_hold(const UpsilonContext& ctx, const std::vector<Point>& b,
                               const MonomialOrder& order) {
  std::vector<Point> gens{ctx.m};
  for (const auto& u : ctx.upsilon) {
    if (!in_sorted(b, u, order)) gens.push_back(u);
  }
  if (monoid_contains(gens, ctx.f)) return false;
  return std::none_of(b.begin(), b.end(), [&](const Point& x) { return monoid_contains(gens, x); });
}

}  // namespace

bool is_admissible_b(const AmbientPtr& ambient, const UpsilonContext& ctx,
                     const std::vector<Point>& b_in) {
  const auto& order = ambient->order();
  auto b = b_in;
  std::sort(b.begin(), b.end(), OrderLess{&order});
  if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
  for (const auto& x : b) {
    if (!in_sorted(ctx.upsilon, x, order) || is_multiple_of(x, ctx.m)) return false;
  }
  for (const auto& [i, j] : window_pairs(ambient, ctx)) {
    if (!in_sorted(b, ctx.upsilon[i], order) && !in_sorted(b, ctx.upsilon[j], order)) return false;
  }
  if (ctx.f.dim() == 1) return true;
  return generated_conditions_hold(ctx, b, order);
}

std::vector<std::vector<Point>> b_family(const AmbientPtr& ambient, const UpsilonContext& ctx) {
  const auto& order = ambient->order();
  const std::size_t n = ctx.upsilon.size();
  std::vector<bool> allowed(n);
  for (std::size_t i = 0; i < n; ++i) allowed[i] = !is_multiple_of(ctx.upsilon[i], ctx.m);
  // For each index, the partners with a larger index in a consecutive pair.
  std::vector<std::vector<std::size_t>> partners(n);
  for (const auto& [i, j] : window_pairs(ambient, ctx)) {
    partners[std::min(i, j)].push_back(std::max(i, j));
    partners[std::max(i, j)].push_back(std::min(i, j));
  }

  std::vector<std::vector<Point>> out;
  std::vector<int> state(n, -1);  // -1 undecided, 0 out of B, 1 in B
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::vector<Point> b;
      for (std::size_t k = 0; k < n; ++k) {
        if (state[k] == 1) b.push_back(ctx.upsilon[k]);
      }
      if (ctx.f.dim() == 1 || generated_conditions_hold(ctx, b, order)) out.push_back(std::move(b));
      return;
    }
    for (int choice : {0, 1}) {
      if (choice == 1 && !allowed[i]) continue;
      // Leaving i out needs every already-decided or forbidden partner inside B.
      if (choice == 0) {
        bool uncovered = std::any_of(partners[i].begin(), partners[i].end(), [&](std::size_t j) {
          return (j < i && state[j] == 0) || (j > i && !allowed[j]);
        });
        if (uncovered) continue;
      }
      state[i] = choice;
      rec(i + 1);
      state[i] = -1;
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

GapSemigroup delta_fmb(const AmbientPtr& ambient, const UpsilonContext& ctx,
                       const std::vector<Point>& b) {
  const auto& order = ambient->order();
  auto gaps = delta(ambient, ctx.f).gaps();
  std::erase_if(gaps, [&](const Point& g) {
    if (is_multiple_of(g, ctx.m)) return true;
    return in_sorted(ctx.upsilon, g, order) &&
           std::find(b.begin(), b.end(), g) == b.end();
  });
  return GapSemigroup::from_gaps(ambient, std::move(gaps));
}

SemigroupTree enumerate_A_fmb(const AmbientPtr& ambient, const Point& f, const Point& m,
                              const std::vector<Point>& b, const EnumerateOptions& options) {
  require_feasible_m(ambient, f, m);
  const auto ctx = upsilon_context(ambient, f, m);
  if (!is_admissible_b(ambient, ctx, b)) {
    throw_precondition("B = " + to_string(b) + " is not in B(" + f.to_string() + "," +
                       m.to_string() + ")");
  }
  const Point ff = f;
  const std::vector<Point> window = ctx.upsilon;
  auto rule = [ff, window](const GapSemigroup& t) { return ratio_children(t, ff, &window); };
  return grow(Family::A_fmB, delta_fmb(ambient, ctx, b), rule, options.workers);
}

SemigroupTree enumerate_AMED_fm(Coord f, Coord m, const EnumerateOptions& options) {
  if (f <= 0 || m <= 0) throw_input("AMED(f,m) needs positive f and m");
  if (f % m == 0) return SemigroupTree{Family::AMED_fm, {}};
  const auto ambient = numerical_ambient();
  auto root = delta_fm(ambient, num(f), num(m));
  auto rule = [](const GapSemigroup& t) {
    std::vector<Child> out;
    const Coord mt = t.multiplicity()[0];
    const Coord rt = t.ratio()[0];
    for (const auto& g : t.gaps()) {
      const Coord x = g[0];
      if (x <= mt) continue;
      if (x >= rt) break;
      if (!t.is_gap(num(x - 1)) || !t.is_gap(num(x + 1))) continue;
      if (!is_special_gap(t, g)) continue;
      auto child = adjoin(t, g);
      if (is_MED(child)) out.emplace_back(g, std::move(child));
    }
    return out;
  };
  return grow(Family::AMED_fm, std::move(root), rule, options.workers);
}

SemigroupTree enumerate_covariety(Coord f, Covariety kind, const EnumerateOptions& options) {
  if (f <= 0) throw_input("f must be positive");
  const Family family = kind == Covariety::Arf ? Family::Arf_f : Family::Sat_f;
  auto rule = [f, kind](const GapSemigroup& t) {
    std::vector<Child> out;
    for (const auto& g : t.gaps()) {
      if (g[0] >= t.multiplicity()[0]) break;
      if (g[0] == f || !is_special_gap(t, g)) continue;
      auto child = adjoin(t, g);
      const bool keep = kind == Covariety::Arf ? is_arf(child).value : is_saturated(child).value;
      if (keep) out.emplace_back(g, std::move(child));
    }
    return out;
  };
  return grow(family, numerical_delta(f), rule, options.workers);
}

std::vector<MultiplicitySlice> partition_A_f(const AmbientPtr& ambient, const Point& f,
                                             const EnumerateOptions& options) {
  std::vector<MultiplicitySlice> out;
  for (const auto& m : m_set(ambient, f)) {
    if (is_multiple_of(f, m)) continue;
    out.push_back({m, enumerate_A_fm(ambient, f, m, options)});
  }
  return out;
}

std::vector<WindowSlice> partition_A_fm(const AmbientPtr& ambient, const Point& f, const Point& m,
                                        const EnumerateOptions& options) {
  require_feasible_m(ambient, f, m);
  const auto ctx = upsilon_context(ambient, f, m);
  std::vector<WindowSlice> out;
  for (auto& b : b_family(ambient, ctx)) {
    auto tree = enumerate_A_fmb(ambient, f, m, b, options);
    out.push_back({std::move(b), std::move(tree)});
  }
  return out;
}

}  // namespace csg
