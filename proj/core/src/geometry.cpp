#include "csg/geometry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "csg/errors.hpp"

namespace csg {
namespace {

__extension__ typedef __int128 Wide;

Coord cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

Point primitive(const Point& ray) {
  Coord g = 0;
  for (Coord c : ray.coords()) g = std::gcd(g, c);
  if (g == 0) throw_input("cone ray must be nonzero");
  std::vector<Coord> scaled;
  for (Coord c : ray.coords()) scaled.push_back(c / g);
  return Point(std::span<const Coord>(scaled));
}

Wide det_wide(std::vector<std::vector<Wide>> a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Nonnegative solution of sum_j lambda_j w_j = x over the rationals, with the
// w_j linearly independent. Cramer's rule on a nonsingular k x k minor, then
// an exact check of the remaining rows.
bool nonnegative_combination(const std::vector<const Point*>& w, std::span<const Coord> x) {
  const std::size_t k = w.size();
  const std::size_t p = x.size();
  std::vector<std::size_t> rows(k);
  std::vector<bool> pick(p, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    rows.clear();
    for (std::size_t r = 0; r < p; ++r) {
      if (pick[r]) rows.push_back(r);
    }
    std::vector<std::vector<Wide>> minor(k, std::vector<Wide>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = (*w[j])[rows[i]];
    }
    const Wide d = det_wide(minor);
    if (d == 0) continue;
    std::vector<Wide> numer(k);
    for (std::size_t j = 0; j < k; ++j) {
      auto replaced = minor;
      for (std::size_t i = 0; i < k; ++i) replaced[i][j] = x[rows[i]];
      numer[j] = det_wide(replaced);
      if ((numer[j] > 0 && d < 0) || (numer[j] < 0 && d > 0)) return false;
    }
    for (std::size_t r = 0; r < p; ++r) {
      Wide lhs = 0;
      for (std::size_t j = 0; j < k; ++j) lhs += numer[j] * (*w[j])[r];
      if (lhs != d * x[r]) return false;
    }
    return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Visits every x in N^p with sum_i weights[i] * x_i <= budget (or == budget
// when `exact`).
void for_each_weighted(const std::vector<Coord>& weights, Coord budget, bool exact,
                       const std::function<void(const Point&)>& visit) {
  const std::size_t p = weights.size();
  std::vector<Coord> x(p, 0);
  std::function<void(std::size_t, Coord)> rec = [&](std::size_t i, Coord left) {
    if (i + 1 == p) {
      const Coord w = weights[i];
      if (exact) {
        if (left % w != 0) return;
        x[i] = left / w;
        visit(Point(std::span<const Coord>(x)));
      } else {
        for (Coord v = 0; v * w <= left; ++v) {
          x[i] = v;
          visit(Point(std::span<const Coord>(x)));
        }
      }
      return;
    }
    for (Coord v = 0; v * weights[i] <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v * weights[i]);
    }
    x[i] = 0;
  };
  if (budget >= 0) rec(0, budget);
}

}  // namespace

bool in_rational_cone(const std::vector<Point>& generators, std::span<const Coord> x) {
  if (std::all_of(x.begin(), x.end(), [](Coord c) { return c == 0; })) return true;
  const std::size_t p = x.size();
  const std::size_t n = generators.size();
  // Caratheodory: x lies in the cone of some independent subset of size <= p.
  for (std::size_t k = 1; k <= std::min(p, n); ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<const Point*> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) subset.push_back(&generators[i]);
      }
      if (nonnegative_combination(subset, x)) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return false;
}

Cone::Cone(std::vector<Point> rays) {
  if (rays.empty()) throw_input("cone needs at least one ray");
  dim_ = rays.front().dim();
  for (auto& r : rays) {
    if (r.dim() != dim_) throw_input("cone rays of mixed dimension");
    r = primitive(r);
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  rays_ = std::move(rays);

  if (dim_ == 1) return;  // every nonzero ray normalizes to (1)

  if (dim_ == 2) {
    // The extremal rays are the extreme directions in angle; others are dropped.
    lower_ = rays_[0];
    upper_ = rays_[0];
    for (const auto& r : rays_) {
      if (cross(r, lower_) > 0) lower_ = r;
      if (cross(upper_, r) > 0) upper_ = r;
    }
    if (lower_ == upper_) throw_input("cone rays do not span a full-dimensional cone");
    rays_ = {lower_, upper_};
    std::sort(rays_.begin(), rays_.end());
    return;
  }
  std::vector<Point> extremal;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < rays_.size(); ++j) {
      if (j != i) others.push_back(rays_[j]);
    }
    if (!in_rational_cone(others, rays_[i].coords())) extremal.push_back(rays_[i]);
  }
  rays_ = std::move(extremal);
  if (rays_.size() < dim_) {
    throw_input("cone in dimension " + std::to_string(dim_) + " needs at least " +
                std::to_string(dim_) + " extremal rays");
  }
  bool full_rank = false;
  std::vector<bool> pick(rays_.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim_), true);
  do {
    std::vector<std::vector<Coord>> m;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (pick[i]) m.emplace_back(rays_[i].coords().begin(), rays_[i].coords().end());
    }
    if (determinant(m) != 0) full_rank = true;
  } while (!full_rank && std::prev_permutation(pick.begin(), pick.end()));
  if (!full_rank) throw_input("cone rays do not span a full-dimensional cone");
}

Cone Cone::orthant(std::size_t dim) { return Cone(unit_vectors(dim)); }

bool Cone::contains(const Point& x) const {
  if (x.dim() != dim_) {
    throw_input("dimension mismatch: point " + x.to_string() + " in cone of dimension " +
                std::to_string(dim_));
  }
  switch (dim_) {
    case 1: return true;
    case 2: return cross(lower_, x) >= 0 && cross(x, upper_) >= 0;
    default: return in_rational_cone(rays_, x.coords());
  }
}

bool cone_contains(const Cone& cone, const Point& x) { return cone.contains(x); }

std::vector<Point> primitive_ray_elements(const Cone& cone) { return cone.rays(); }

std::vector<Point> hilbert_basis(const Cone& cone) {
  const std::size_t p = cone.dim();
  if (p > 3) throw_capability("hilbert_basis supports p <= 3, got p = " + std::to_string(p));
  if (p == 1) return {Point{1}};

  Coord bound = 0;
  for (const auto& r : cone.rays()) bound += r.degree();

  std::vector<Point> region;
  for_each_weighted(std::vector<Coord>(p, 1), bound, false, [&](const Point& x) {
    if (!x.is_zero() && cone.contains(x)) region.push_back(x);
  });
  std::sort(region.begin(), region.end(), [](const Point& a, const Point& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });

  std::vector<Point> basis;
  for (const auto& x : region) {
    bool reducible = false;
    for_each_weighted(std::vector<Coord>(p, 1), x.degree(), false, [&](const Point& a) {
      if (reducible || a.is_zero() || a == x || !componentwise_le(a, x)) return;
      auto rest = checked_sub(x, a);
      if (cone.contains(a) && cone.contains(*rest)) reducible = true;
    });
    if (!reducible) basis.push_back(x);
  }

  // Closure pass: every sieved cone point is a sum of basis elements.
  std::unordered_set<Point, PointHash> reachable;
  for (const auto& x : region) {
    bool ok = std::find(basis.begin(), basis.end(), x) != basis.end();
    for (const auto& h : basis) {
      if (ok) break;
      auto rest = checked_sub(x, h);
      ok = rest && (rest->is_zero() || reachable.contains(*rest));
    }
    if (!ok) throw std::logic_error("hilbert basis closure failed at " + x.to_string());
    reachable.insert(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<Point> points_at_level(const Cone& cone, const MonomialOrder& order, Coord level) {
  require_enumerable(order);
  std::vector<Point> out;
  for_each_weighted(order.functionals().front(), level, true, [&](const Point& x) {
    if (cone.contains(x)) out.push_back(x);
  });
  std::sort(out.begin(), out.end(), OrderLess{&order});
  return out;
}

std::vector<Point> points_up_to_level(const Cone& cone, const MonomialOrder& order,
                                      Coord level) {
  require_enumerable(order);
  std::vector<Point> out;
  for_each_weighted(order.functionals().front(), level, false, [&](const Point& x) {
    if (cone.contains(x)) out.push_back(x);
  });
  std::sort(out.begin(), out.end(), OrderLess{&order});
  return out;
}

std::vector<Point> enumerate_up_to(const Cone& cone, const MonomialOrder& order, const Point& k) {
  require_enumerable(order);
  if (k.dim() != cone.dim() || order.dim() != cone.dim()) {
    throw_input("dimension mismatch in enumerate_up_to");
  }
  auto out = points_up_to_level(cone, order, order.pi1(k));
  std::erase_if(out, [&](const Point& x) { return order.less(k, x); });
  return out;
}

}  // namespace csg
