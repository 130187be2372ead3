#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csg/classify.hpp"
#include "csg/semigroup.hpp"

namespace csg {

enum class Family { A_f, A_fm, A_fmB, AMED_fm, Arf_f, Sat_f };

const char* to_string(Family family);
/// Inverse of to_string; also accepts the short CLI names af, afm, afmb,
/// amed, arf, sat.
std::optional<Family> parse_family(const std::string& name);

/// true for families whose edges remove the ratio instead of the multiplicity.
bool is_ratio_family(Family family);

struct TreeNode {
  GapSemigroup semigroup;
  std::optional<std::size_t> parent;
  std::optional<Point> adjoined;
  std::size_t depth = 0;
};

/// Nodes in breadth-first order; the children of a node are sorted by the
/// adjoined gap. The tree is empty only for an infeasible AMED request.
struct SemigroupTree {
  Family family = Family::A_f;
  std::vector<TreeNode> nodes;

  bool empty() const noexcept { return nodes.empty(); }
  std::size_t size() const noexcept { return nodes.size(); }
  const GapSemigroup& root() const { return nodes.front().semigroup; }

  /// Gap sets of all nodes, for order-independent comparisons.
  std::set<std::vector<Point>> gap_sets() const;
};

struct EnumerateOptions {
  std::size_t workers = 1;
  /// A(f,m) with f < 2m: use the ratio tree instead of the closed form.
  bool force_tree = false;
};

GapSemigroup delta(const AmbientPtr& ambient, const Point& f);
GapSemigroup delta(const Cone& cone, const MonomialOrder& order, const Point& f);

/// M(f): nonzero cone points below f plus the successor of f. For p = 1 the
/// point 1 is left out, since <1> = N has no gaps.
std::vector<Point> m_set(const AmbientPtr& ambient, const Point& f);
bool in_m_set(const AmbientPtr& ambient, const Point& f, const Point& m);

/// <m> ∪ Δ(f). Infeasible when f in <m>.
GapSemigroup delta_fm(const AmbientPtr& ambient, const Point& f, const Point& m);

SemigroupTree enumerate_A_f(const AmbientPtr& ambient, const Point& f,
                            const EnumerateOptions& options = {});

/// Closed form when f < 2m, ratio tree otherwise.
SemigroupTree enumerate_A_fm(const AmbientPtr& ambient, const Point& f, const Point& m,
                             const EnumerateOptions& options = {});

/// Capability error unless f > 2m.
UpsilonContext upsilon_context(const AmbientPtr& ambient, const Point& f, const Point& m);
/// B(f,m), by increasing cardinality.
std::vector<std::vector<Point>> b_family(const AmbientPtr& ambient, const UpsilonContext& ctx);
bool is_admissible_b(const AmbientPtr& ambient, const UpsilonContext& ctx,
                     const std::vector<Point>& b);

/// <m> ∪ (Υ \ B) ∪ Δ(f).
GapSemigroup delta_fmb(const AmbientPtr& ambient, const UpsilonContext& ctx,
                       const std::vector<Point>& b);

SemigroupTree enumerate_A_fmb(const AmbientPtr& ambient, const Point& f, const Point& m,
                              const std::vector<Point>& b, const EnumerateOptions& options = {});

/// Numerical. Empty tree when f in <m>.
SemigroupTree enumerate_AMED_fm(Coord f, Coord m, const EnumerateOptions& options = {});

enum class Covariety { Arf, Sat };

/// Numerical multiplicity tree of Arf(f) or Sat(f).
SemigroupTree enumerate_covariety(Coord f, Covariety kind, const EnumerateOptions& options = {});

struct MultiplicitySlice {
  Point m;
  SemigroupTree tree;
};

/// A(f) split by multiplicity, ascending in m; infeasible m are skipped.
std::vector<MultiplicitySlice> partition_A_f(const AmbientPtr& ambient, const Point& f,
                                             const EnumerateOptions& options = {});

struct WindowSlice {
  std::vector<Point> b;
  SemigroupTree tree;
};

/// A(f,m) split by B(S) = Υ \ S, one slice per member of B(f,m).
std::vector<WindowSlice> partition_A_fm(const AmbientPtr& ambient, const Point& f, const Point& m,
                                        const EnumerateOptions& options = {});

}  // namespace csg
