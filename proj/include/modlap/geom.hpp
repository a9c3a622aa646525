#pragma once

#include <cstdint>
#include <compare>
#include <vector>

namespace modlap {

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

// Inclusive cell-coordinate box. Default-constructed box is empty.
struct BoundingBox {
  int min_x = 0, min_y = 0, max_x = -1, max_y = -1;

  bool empty() const { return max_x < min_x || max_y < min_y; }
  int width() const { return empty() ? 0 : max_x - min_x + 1; }
  int height() const { return empty() ? 0 : max_y - min_y + 1; }
  long long area() const { return 1LL * width() * height(); }
  bool contains(Point p) const {
    return !empty() && p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
  void include(Point p) {
    if (empty()) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
    } else {
      if (p.x < min_x) min_x = p.x;
      if (p.x > max_x) max_x = p.x;
      if (p.y < min_y) min_y = p.y;
      if (p.y > max_y) max_y = p.y;
    }
  }
  bool overlaps(const BoundingBox& o) const {
    if (empty() || o.empty()) return false;
    return min_x <= o.max_x && o.min_x <= max_x && min_y <= o.max_y && o.min_y <= max_y;
  }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

inline BoundingBox bounding_box_of(const std::vector<Point>& pts) {
  BoundingBox b;
  for (Point p : pts) b.include(p);
  return b;
}

}  // namespace modlap
