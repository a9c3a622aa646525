#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlap/lattice.hpp"
#include "modlap/metrics.hpp"
#include "modlap/symmetry.hpp"

namespace modlap {

inline long long cross_product(Point o, Point a, Point b) {
  return (long long)(a.x - o.x) * (b.y - o.y) - (long long)(a.y - o.y) * (b.x - o.x);
}

// Monotone chain over cell centers, integer arithmetic only. Returns the
// minimal counterclockwise vertex list: strict turns, so collinear boundary
// points never appear. Degenerate supports give 1 or 2 vertices.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("convex hull needs a nonempty support");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Point> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross_product(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross_product(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline std::vector<Point> convex_hull(const LatticeState& s) { return convex_hull(s.support()); }

namespace detail {

// Turn (exterior) angle at vertex i of a counterclockwise hull, degrees.
inline double turn_angle_deg(const std::vector<Point>& hull, size_t i) {
  size_t n = hull.size();
  Point a = hull[(i + n - 1) % n], b = hull[i], c = hull[(i + 1) % n];
  double e1x = b.x - a.x, e1y = b.y - a.y;
  double e2x = c.x - b.x, e2y = c.y - b.y;
  double cr = e1x * e2y - e1y * e2x;
  double dot = e1x * e2x + e1y * e2y;
  return std::atan2(cr, dot) * 180.0 / 3.14159265358979323846;
}

}  // namespace detail

// Smooths lattice staircase: repeatedly drops the hull vertex with the
// smallest exterior angle while one falls below the tolerance. Keeps at
// least 3 vertices.
inline std::vector<Point> merge_collinear(std::vector<Point> hull, double tolerance_deg = 15.0) {
  while (hull.size() > 3) {
    size_t best = 0;
    double best_angle = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < hull.size(); ++i) {
      double a = detail::turn_angle_deg(hull, i);
      if (a < best_angle) {
        best_angle = a;
        best = i;
      }
    }
    if (best_angle >= tolerance_deg) break;
    hull.erase(hull.begin() + (long)best);
  }
  return hull;
}

enum class OutlineClass { square, diamond, triangle, pentagon, hexagon, irregular };

inline std::string to_string(OutlineClass c) {
  switch (c) {
    case OutlineClass::square: return "square";
    case OutlineClass::diamond: return "diamond";
    case OutlineClass::triangle: return "triangle";
    case OutlineClass::pentagon: return "pentagon";
    case OutlineClass::hexagon: return "hexagon";
    default: return "irregular";
  }
}

namespace detail {

// Distance from an edge direction to the nearest member of an angle family
// (degrees, undirected).
inline double angle_distance(double theta, std::initializer_list<double> family) {
  double best = 180.0;
  for (double f : family) {
    double d = std::fmod(std::fabs(theta - f), 180.0);
    best = std::min(best, std::min(d, 180.0 - d));
  }
  return best;
}

}  // namespace detail

// Class of a merged hull: quadrilaterals split into axis-aligned squares and
// diagonal diamonds; 3/5/6 vertices name their polygon; everything else,
// including degenerate hulls, is irregular.
inline OutlineClass classify_outline(const std::vector<Point>& hull, double tolerance_deg = 15.0) {
  if (hull.empty()) throw std::invalid_argument("outline classification needs a nonempty hull");
  std::vector<Point> merged = hull.size() > 3 ? merge_collinear(hull, tolerance_deg) : hull;
  size_t n = merged.size();
  if (n == 3) return OutlineClass::triangle;
  if (n == 5) return OutlineClass::pentagon;
  if (n == 6) return OutlineClass::hexagon;
  if (n != 4) return OutlineClass::irregular;
  bool axis = true, diag = true;
  for (size_t i = 0; i < 4; ++i) {
    Point a = merged[i], b = merged[(i + 1) % 4];
    double theta = std::atan2(double(b.y - a.y), double(b.x - a.x)) * 180.0 / 3.14159265358979323846;
    axis = axis && detail::angle_distance(theta, {0.0, 90.0}) <= tolerance_deg;
    diag = diag && detail::angle_distance(theta, {45.0, 135.0}) <= tolerance_deg;
  }
  if (axis) return OutlineClass::square;
  if (diag) return OutlineClass::diamond;
  return OutlineClass::irregular;
}

// Principal second moments of the support about its centroid. The ratio is
// major/minor variance, >= 1; a perfectly 1D figure reports infinity and a
// single cell reports 1.
struct InertiaAxes {
  double major_x = 1.0, major_y = 0.0;
  double minor_x = 0.0, minor_y = 1.0;
  double anisotropy = 1.0;
};

inline InertiaAxes inertia_axes(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("inertia needs a nonempty support");
  double n = double(pts.size()), cx = 0, cy = 0;
  for (Point p : pts) cx += p.x, cy += p.y;
  cx /= n, cy /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (Point p : pts) {
    double dx = p.x - cx, dy = p.y - cy;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  double tr = sxx + syy, half = (sxx - syy) / 2;
  double disc = std::sqrt(half * half + sxy * sxy);
  double l1 = tr / 2 + disc, l2 = tr / 2 - disc;
  InertiaAxes ax;
  const double tiny = 1e-12;
  ax.anisotropy = l2 > tiny ? l1 / l2
                            : (l1 > tiny ? std::numeric_limits<double>::infinity() : 1.0);
  double vx, vy;
  if (std::fabs(sxy) > tiny) {
    vx = l1 - syy;
    vy = sxy;
  } else {
    vx = sxx >= syy ? 1.0 : 0.0;
    vy = sxx >= syy ? 0.0 : 1.0;
  }
  double len = std::sqrt(vx * vx + vy * vy);
  if (len > tiny) {
    ax.major_x = vx / len;
    ax.major_y = vy / len;
  }
  ax.minor_x = -ax.major_y;
  ax.minor_y = ax.major_x;
  return ax;
}

struct OutlineDescriptor {
  std::vector<Point> hull;            // extreme points, counterclockwise
  std::vector<Point> merged_hull;     // after staircase smoothing
  std::vector<double> salient_angles; // exterior angles of merged_hull, degrees
  InertiaAxes inertia;
  OutlineClass outline_class = OutlineClass::irregular;
};

inline OutlineDescriptor outline_descriptor(const LatticeState& s, double tolerance_deg = 15.0) {
  OutlineDescriptor d;
  std::vector<Point> pts = s.support();
  d.hull = convex_hull(pts);
  d.merged_hull = d.hull.size() > 3 ? merge_collinear(d.hull, tolerance_deg) : d.hull;
  if (d.merged_hull.size() >= 3)
    for (size_t i = 0; i < d.merged_hull.size(); ++i)
      d.salient_angles.push_back(detail::turn_angle_deg(d.merged_hull, i));
  d.inertia = inertia_axes(pts);
  d.outline_class = classify_outline(d.hull, tolerance_deg);
  return d;
}

// Reflection invariance about the bounding-box center; support_only ignores
// residue values.
inline SymmetrySignature figure_symmetry(const LatticeState& s, bool exact_residues = true) {
  std::vector<Point> pts = s.support();
  if (pts.empty()) throw std::invalid_argument("figure symmetry needs a nonempty support");
  BoundingBox b = s.bounding_box();
  std::vector<detail::TaggedPoint> tagged;
  tagged.reserve(pts.size());
  for (Point p : pts) tagged.push_back({p, exact_residues ? int(s.get(p)) : 1});
  return detail::reflection_signature(tagged, b.min_x + b.max_x, b.min_y + b.max_y);
}

inline bool is_double_symmetric(const LatticeState& s) {
  return figure_symmetry(s).klass() == SymmetryClass::double_symmetric;
}

inline std::string outline_csv_header() { return "t,class,hull_vertices,anisotropy"; }

inline std::string outline_csv_line(long long t, const OutlineDescriptor& d) {
  return std::to_string(t) + "," + to_string(d.outline_class) + "," +
         std::to_string(d.hull.size()) + "," + format_g9(d.inertia.anisotropy);
}

}  // namespace modlap
