#pragma once

#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

namespace geokit {

/// A point of a space: either a flat coordinate vector (normed plane,
/// half-plane) or a tuple of factor points (product space). Points are
/// immutable values; equality is exact coordinate comparison.
class Point {
 public:
  Point() = default;

  static Point flat(std::vector<double> coords);
  static Point flat(std::initializer_list<double> coords);
  static Point tuple(std::vector<Point> factors);

  bool is_tuple() const {
    return std::holds_alternative<std::vector<Point>>(rep_);
  }
  std::span<const double> coords() const;
  const std::vector<Point>& factors() const;

  // All scalar coordinates in order, factors flattened left to right.
  void flatten_into(std::vector<double>& out) const;
  std::vector<double> flattened() const;

  bool operator==(const Point&) const = default;

 private:
  std::variant<std::vector<double>, std::vector<Point>> rep_;
};

// Lexicographic order on flattened coordinates (tuples compare shorter-first
// on mismatched shapes). Used to canonicalize order-symmetric operations.
bool point_less(const Point& a, const Point& b);

}  // namespace geokit
