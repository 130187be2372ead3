#include "csg/point.hpp"

#include <algorithm>
#include <numeric>

#include "csg/errors.hpp"

namespace csg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "INPUT_ERROR";
    case ErrorKind::Precondition: return "PRECONDITION";
    case ErrorKind::Capability: return "CAPABILITY";
    case ErrorKind::Infeasible: return "INFEASIBLE";
    case ErrorKind::NotPresent: return "NOT_PRESENT";
    case ErrorKind::ClosureViolation: return "CLOSURE_VIOLATION";
  }
  return "UNKNOWN";
}

ClosureViolation::ClosureViolation(Point gap, Point a, Point b)
    : Error(ErrorKind::ClosureViolation,
            "CLOSURE_VIOLATION: gap " + gap.to_string() + " = " + a.to_string() + " + " +
                b.to_string() + " with both summands in the semigroup"),
      gap_(std::move(gap)),
      left_(std::move(a)),
      right_(std::move(b)) {}

void throw_input(const std::string& message) { throw Error(ErrorKind::Input, message); }
void throw_precondition(const std::string& message) {
  throw Error(ErrorKind::Precondition, message);
}
void throw_capability(const std::string& message) { throw Error(ErrorKind::Capability, message); }
void throw_infeasible(const std::string& message) { throw Error(ErrorKind::Infeasible, message); }
void throw_not_present(const std::string& message) { throw Error(ErrorKind::NotPresent, message); }

Point::Point(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw_capability("dimension " + std::to_string(dim) + " outside [1, " +
                     std::to_string(kMaxDim) + "]");
  }
}

Point::Point(std::initializer_list<Coord> coords)
    : Point(std::span<const Coord>(coords.begin(), coords.size())) {}

Point::Point(std::span<const Coord> coords) : Point(coords.size()) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) {
      throw_input("negative coordinate " + std::to_string(coords[i]) + " in lattice point");
    }
    coords_[i] = coords[i];
  }
}

Point Point::unit(std::size_t dim, std::size_t index) {
  Point p(dim);
  p.coords_[index] = 1;
  return p;
}

bool Point::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

Coord Point::degree() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), Coord{0});
}

Point Point::scaled(Coord k) const {
  Point p = *this;
  for (std::size_t i = 0; i < dim_; ++i) p.coords_[i] *= k;
  return p;
}

std::string Point::to_string() const {
  if (dim_ == 1) return std::to_string(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

Point operator+(const Point& a, const Point& b) {
  if (a.dim_ != b.dim_) throw_input("dimension mismatch in point addition");
  Point p = a;
  for (std::size_t i = 0; i < a.dim_; ++i) p.coords_[i] += b.coords_[i];
  return p;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) noexcept {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::optional<Point> checked_sub(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw_input("dimension mismatch in point subtraction");
  std::vector<Coord> diff(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    diff[i] = a[i] - b[i];
    if (diff[i] < 0) return std::nullopt;
  }
  return Point(std::span<const Coord>(diff));
}

bool componentwise_le(const Point& a, const Point& b) noexcept {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<Point> unit_vectors(std::size_t dim) {
  std::vector<Point> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(Point::unit(dim, i));
  return out;
}

bool is_multiple_of(const Point& x, const Point& m) {
  std::size_t pivot = 0;
  while (pivot < m.dim() && m[pivot] == 0) ++pivot;
  if (pivot == m.dim()) return x.is_zero();
  if (x[pivot] % m[pivot] != 0) return false;
  const Coord k = x[pivot] / m[pivot];
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (x[i] != k * m[i]) return false;
  }
  return true;
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = p.dim();
  for (Coord c : p.coords()) {
    h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(std::span<const Point> points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += points[i].to_string();
  }
  return out + "}";
}

}  // namespace csg
