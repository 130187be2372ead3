#include "csg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "csg/errors.hpp"

namespace csg {
namespace {

void sort_by_order(std::vector<Point>& v, const MonomialOrder& order) {
  std::sort(v.begin(), v.end(), OrderLess{&order});
}

bool contains_sorted(const std::vector<Point>& v, const Point& x, const MonomialOrder& order) {
  return std::binary_search(v.begin(), v.end(), x, OrderLess{&order});
}

}  // namespace

Ambient::Ambient(Cone cone, MonomialOrder order) : cone_(std::move(cone)), order_(std::move(order)) {
  if (cone_.dim() != order_.dim()) {
    throw_input("cone has dimension " + std::to_string(cone_.dim()) + " but the order has " +
                std::to_string(order_.dim()));
  }
  require_enumerable(order_);
}

Coord Ambient::hilbert_max() const {
  std::call_once(hilbert_once_, [this] {
    for (const auto& h : hilbert_basis(cone_)) hilbert_max_ = std::max(hilbert_max_, order_.pi1(h));
  });
  return hilbert_max_;
}

const std::vector<Point>& Ambient::delta_msg(const Point& f) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = delta_msg_cache_.find(f); it != delta_msg_cache_.end()) return it->second;
  }
  // Beyond pi_1 = 2(pi_1(f) + Hmax) every element splits into two parts above f.
  const Coord bound = 2 * (order_.pi1(f) + hilbert_max());
  std::vector<Point> region = points_up_to_level(cone_, order_, bound);
  std::erase_if(region, [&](const Point& x) { return !order_.less(f, x); });

  std::vector<Point> gens;
  for (std::size_t i = 0; i < region.size(); ++i) {
    const Point& x = region[i];
    bool reducible = false;
    for (std::size_t j = 0; j < i && !reducible; ++j) {
      auto rest = checked_sub(x, region[j]);
      reducible = rest && cone_.contains(*rest) && order_.less(f, *rest);
    }
    if (!reducible) gens.push_back(x);
  }
  std::lock_guard lock(cache_mutex_);
  return delta_msg_cache_.try_emplace(f, std::move(gens)).first->second;
}

AmbientPtr make_ambient(Cone cone, MonomialOrder order) {
  return std::make_shared<const Ambient>(std::move(cone), std::move(order));
}

AmbientPtr numerical_ambient() {
  static const AmbientPtr ambient = make_ambient(Cone::numerical(), MonomialOrder::graded_lex(1));
  return ambient;
}

GapSemigroup::GapSemigroup(AmbientPtr ambient, std::vector<Point> gaps)
    : ambient_(std::move(ambient)), gaps_(std::move(gaps)) {
  const auto& order = ambient_->order();
  const auto& cone = ambient_->cone();
  if (gaps_.empty()) {
    multiplicity_ = successor(order, cone, Point(cone.dim()));
    return;
  }
  frobenius_ = gaps_.back();
  const auto region = enumerate_up_to(cone, order, *frobenius_);
  std::size_t g = 0;
  for (const auto& x : region) {
    if (g < gaps_.size() && x == gaps_[g]) {
      ++g;
    } else {
      small_.push_back(x);
    }
  }
  if (g != gaps_.size()) throw std::logic_error("gap set escaped the enumerated region");
  multiplicity_ = small_.size() > 1 ? small_[1] : successor(order, cone, *frobenius_);
}

GapSemigroup GapSemigroup::from_trusted_gaps(AmbientPtr ambient, std::vector<Point> gaps) {
  sort_by_order(gaps, ambient->order());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return GapSemigroup(std::move(ambient), std::move(gaps));
}

GapSemigroup GapSemigroup::from_gaps(AmbientPtr ambient, std::vector<Point> gaps) {
  for (const auto& g : gaps) {
    if (g.dim() != ambient->dim()) {
      throw_input("gap " + g.to_string() + " has the wrong dimension");
    }
    if (g.is_zero()) throw_input("0 cannot be a gap");
    if (!ambient->cone().contains(g)) throw_input("gap " + g.to_string() + " is outside the cone");
  }
  GapSemigroup s = from_trusted_gaps(std::move(ambient), std::move(gaps));
  const auto& order = s.order();
  for (const auto& g : s.gaps_) {
    for (std::size_t i = 1; i < s.small_.size() && order.less(s.small_[i], g); ++i) {
      const Point& a = s.small_[i];
      auto rest = checked_sub(g, a);
      if (rest && s.contains(*rest)) throw ClosureViolation(g, a, *rest);
    }
  }
  return s;
}

GapSemigroup GapSemigroup::from_gaps(const Cone& cone, const MonomialOrder& order,
                                     std::vector<Point> gaps) {
  return from_gaps(make_ambient(cone, order), std::move(gaps));
}

GapSemigroup GapSemigroup::numerical(const std::vector<Coord>& gaps) {
  std::vector<Point> pts;
  pts.reserve(gaps.size());
  for (Coord g : gaps) pts.push_back(num(g));
  return from_gaps(numerical_ambient(), std::move(pts));
}

GapSemigroup GapSemigroup::whole_cone(AmbientPtr ambient) {
  return GapSemigroup(std::move(ambient), {});
}

bool GapSemigroup::is_gap(const Point& x) const {
  if (!frobenius_ || order().less(*frobenius_, x)) return false;
  return contains_sorted(gaps_, x, order());
}

bool GapSemigroup::contains(const Point& x) const {
  return cone().contains(x) && !is_gap(x);
}

const Point& GapSemigroup::frobenius_element() const {
  if (!frobenius_) throw_not_present("S has no gaps, so it has no Frobenius element");
  return *frobenius_;
}

Point GapSemigroup::ratio() const {
  const Point& m = multiplicity_;
  for (std::size_t i = 1; i < small_.size(); ++i) {
    if (!is_multiple_of(small_[i], m)) return small_[i];
  }
  if (dim() == 1 && m[0] == 1) throw_not_present("S = <1> has no ratio");
  const auto& order = this->order();
  const Coord start = frobenius_ ? order.pi1(*frobenius_) : 0;
  const Coord stop = start + 4 * (order.pi1(m) + ambient_->hilbert_max()) + 4;
  for (Coord level = start; level <= stop; ++level) {
    for (const auto& x : points_at_level(cone(), order, level)) {
      if (frobenius_ && !order.less(*frobenius_, x)) continue;
      if (!x.is_zero() && !is_multiple_of(x, m)) return x;
    }
  }
  throw_not_present("S = <m(S)> has no ratio");
}

std::vector<Point> GapSemigroup::msg() const {
  std::vector<Point> out;
  if (!frobenius_) {
    out = hilbert_basis(cone());
    sort_by_order(out, order());
    return out;
  }
  auto decomposable = [&](const Point& x) {
    for (std::size_t i = 1; i < small_.size() && order().less(small_[i], x); ++i) {
      auto rest = checked_sub(x, small_[i]);
      if (rest && !rest->is_zero() && contains(*rest)) return true;
    }
    return false;
  };
  for (std::size_t i = 1; i < small_.size(); ++i) {
    if (!decomposable(small_[i])) out.push_back(small_[i]);
  }
  for (const auto& y : ambient_->delta_msg(*frobenius_)) {
    if (!decomposable(y)) out.push_back(y);
  }
  return out;
}

std::string GapSemigroup::to_string() const {
  if (dim() != 1) return "H = " + csg::to_string(gaps_);
  std::string out = "{";
  for (const auto& s : small_) out += s.to_string() + ",";
  out += frobenius_ ? std::to_string((*frobenius_)[0] + 1) : "0";
  return out + ",→}";
}

bool operator==(const GapSemigroup& a, const GapSemigroup& b) {
  if (a.ambient_ != b.ambient_ &&
      (a.cone() != b.cone() || a.order() != b.order())) {
    return false;
  }
  return a.gaps_ == b.gaps_;
}

AperySet apery(const GapSemigroup& s, const Point& b) {
  if (b.is_zero() || !s.contains(b)) {
    throw_precondition("Apery base " + b.to_string() + " is not a nonzero element of S");
  }
  AperySet ap{b, {}};
  if (s.dim() == 1) {
    const Coord top = (s.frobenius() ? (*s.frobenius())[0] : 0) + b[0];
    for (Coord a = 0; a <= top; ++a) {
      if (s.contains(num(a)) && (a < b[0] || !s.contains(num(a - b[0])))) {
        ap.elements.push_back(num(a));
      }
    }
    return ap;
  }
  ap.elements.push_back(Point(s.dim()));
  for (const auto& g : s.gaps()) {
    Point a = g + b;
    if (s.contains(a)) ap.elements.push_back(a);
  }
  sort_by_order(ap.elements, s.order());
  return ap;
}

AperySet apery_adjoin(const GapSemigroup& s, const AperySet& ap, const Point& x) {
  const Point& b = ap.base;
  if (!is_special_gap(s, x)) throw_precondition(x.to_string() + " is not a special gap of S");
  if (b.is_zero() || !s.contains(b)) {
    throw_precondition("Apery base " + b.to_string() + " is not a nonzero element of S");
  }
  auto in_new = [&](const Point& y) { return y == x || s.contains(y); };
  auto keeps = [&](const Point& a) {
    if (s.dim() == 1) return a[0] < b[0] || !in_new(num(a[0] - b[0]));
    if (a.is_zero()) return true;
    auto below = checked_sub(a, b);
    return below && s.is_gap(*below) && *below != x;
  };

  std::vector<Point> candidates{x};
  const Point xb = x + b;
  for (const auto& a : ap.elements) {
    if (a != xb) candidates.push_back(a);
  }
  sort_by_order(candidates, s.order());
  AperySet out{b, {}};
  for (const auto& a : candidates) {
    if (keeps(a)) out.elements.push_back(a);
  }
  auto below = checked_sub(x, b);
  if (below && s.is_gap(*below) && out.elements != candidates) {
    throw std::logic_error("incremental Apery update lost an element in the equality case");
  }
  return out;
}

AperySet apery_adjoin(const GapSemigroup& s, const Point& x, const Point& b) {
  return apery_adjoin(s, apery(s, b), x);
}

std::vector<Point> pseudo_frobenius(const GapSemigroup& s) {
  if (s.gaps().empty()) throw_not_present("S has no gaps, so PF(S) is undefined");
  const Point& b = s.multiplicity();
  const auto ap = apery(s, b);
  std::vector<Point> out;
  for (const auto& a : ap.elements) {
    bool maximal = true;
    for (const auto& other : ap.elements) {
      if (other == a) continue;
      auto diff = checked_sub(other, a);
      if (diff && s.contains(*diff)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(*checked_sub(a, b));
  }
  sort_by_order(out, s.order());
  return out;
}

std::vector<Point> pseudo_frobenius_definitional(const GapSemigroup& s) {
  if (s.gaps().empty()) throw_not_present("S has no gaps, so PF(S) is undefined");
  std::vector<Point> out;
  const auto& small = s.small_elements();
  for (const auto& x : s.gaps()) {
    // Elements above Fb(S) keep x + s above Fb(S).
    bool ok = std::all_of(small.begin() + 1, small.end(),
                          [&](const Point& t) { return s.contains(x + t); });
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<Point> special_gaps(const GapSemigroup& s) {
  auto pf = pseudo_frobenius(s);
  std::erase_if(pf, [&](const Point& x) { return !s.contains(x.scaled(2)); });
  return pf;
}

bool is_special_gap(const GapSemigroup& s, const Point& x) {
  if (x.dim() != s.dim() || !s.is_gap(x) || !s.contains(x.scaled(2))) return false;
  const auto& small = s.small_elements();
  return std::all_of(small.begin() + 1, small.end(),
                     [&](const Point& t) { return s.contains(x + t); });
}

GapSemigroup adjoin(const GapSemigroup& s, const Point& x) {
  if (!is_special_gap(s, x)) {
    throw_precondition("cannot adjoin " + x.to_string() + ": not a special gap of S");
  }
  const auto& order = s.order();
  GapSemigroup t;
  t.ambient_ = s.ambient_;
  t.gaps_.reserve(s.gaps_.size() - 1);
  for (const auto& g : s.gaps_) {
    if (g != x) t.gaps_.push_back(g);
  }
  if (x == *s.frobenius_) {
    if (!t.gaps_.empty()) {
      t.frobenius_ = t.gaps_.back();
      for (const auto& e : s.small_) {
        if (order.less(e, *t.frobenius_)) t.small_.push_back(e);
      }
    }
  } else {
    t.frobenius_ = s.frobenius_;
    t.small_ = s.small_;
    t.small_.insert(std::upper_bound(t.small_.begin(), t.small_.end(), x, OrderLess{&order}), x);
  }
  t.multiplicity_ = order.less(x, s.multiplicity_) ? x : s.multiplicity_;
  return t;
}

GapSemigroup remove_multiplicity(const GapSemigroup& s) {
  auto gaps = s.gaps();
  gaps.push_back(s.multiplicity());
  return GapSemigroup::from_trusted_gaps(s.ambient_ptr(), std::move(gaps));
}

GapSemigroup remove_ratio(const GapSemigroup& s) {
  auto gaps = s.gaps();
  gaps.push_back(s.ratio());
  return GapSemigroup::from_trusted_gaps(s.ambient_ptr(), std::move(gaps));
}

bool monoid_contains(const std::vector<Point>& generators, const Point& x) {
  std::unordered_map<Point, bool, PointHash> memo;
  std::function<bool(const Point&)> rec = [&](const Point& y) {
    if (y.is_zero()) return true;
    if (auto it = memo.find(y); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      if (auto rest = checked_sub(y, g); rest && rec(*rest)) {
        ok = true;
        break;
      }
    }
    memo.emplace(y, ok);
    return ok;
  };
  return rec(x);
}

}  // namespace csg
