#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace csg {

using Coord = std::int64_t;

/// Largest ambient dimension a Point can carry.
inline constexpr std::size_t kMaxDim = 4;

/// Lattice point of N^p. Coordinates are non-negative; unused slots are zero.
///
/// The built-in comparison is plain coordinate-lexicographic and exists only
/// so points can live in ordered containers. Semigroup code always compares
/// through a MonomialOrder.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim);
  Point(std::initializer_list<Coord> coords);
  explicit Point(std::span<const Coord> coords);

  static Point unit(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return dim_; }
  Coord operator[](std::size_t i) const noexcept { return coords_[i]; }
  std::span<const Coord> coords() const noexcept { return {coords_.data(), dim_}; }

  bool is_zero() const noexcept;
  Coord degree() const noexcept;

  Point scaled(Coord k) const;

  /// "13" for p = 1, "(7,2)" otherwise.
  std::string to_string() const;

  friend Point operator+(const Point& a, const Point& b);
  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) noexcept;

 private:
  std::array<Coord, kMaxDim> coords_{};
  std::size_t dim_ = 0;
};

/// a - b when the difference stays in N^p.
std::optional<Point> checked_sub(const Point& a, const Point& b);

/// a <= b componentwise.
bool componentwise_le(const Point& a, const Point& b) noexcept;

/// Canonical basis e_1, ..., e_p.
std::vector<Point> unit_vectors(std::size_t dim);

/// true iff x = k * m for some integer k >= 0. m must be nonzero.
bool is_multiple_of(const Point& x, const Point& m);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

std::string to_string(std::span<const Point> points);

}  // namespace csg
