#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modlap/geom.hpp"
#include "modlap/symmetry.hpp"

namespace modlap {

// Neighborhood: finite set of nonzero offsets. The origin cell itself is
// never a neighbor.
struct Mask {
  std::string name;
  std::vector<Point> offsets;  // sorted, deduplicated

  int degree() const { return int(offsets.size()); }
  int radius() const {
    int r = 0;
    for (Point p : offsets) r = std::max({r, std::abs(p.x), std::abs(p.y)});
    return r;
  }
  friend bool operator==(const Mask& a, const Mask& b) { return a.offsets == b.offsets; }
};

inline Mask make_mask(std::string name, std::vector<Point> offsets) {
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  if (offsets.empty()) throw std::invalid_argument("empty-mask: a mask needs at least one offset");
  for (Point p : offsets)
    if (p.x == 0 && p.y == 0)
      throw std::invalid_argument("origin-marked-as-neighbor: offset (0,0) is not allowed");
  return Mask{std::move(name), std::move(offsets)};
}

inline const std::vector<std::string>& builtin_mask_names() {
  static const std::vector<std::string> names = {
      "von-neumann", "diag-neumann", "moore",  "hexagonal", "tannenbaum",
      "kite",        "rocket",       "roof",   "l-shaped"};
  return names;
}

// Catalog defaults. The last five are also shipped as editable files under
// data/masks/ with identical content.
inline Mask builtin_mask(std::string_view name) {
  if (name == "von-neumann")
    return make_mask("von-neumann", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  if (name == "diag-neumann")
    return make_mask("diag-neumann", {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  if (name == "moore")
    return make_mask("moore", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  if (name == "hexagonal")
    return make_mask("hexagonal", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  if (name == "tannenbaum")
    return make_mask("tannenbaum", {{0, 1}, {-1, -1}, {0, -1}, {1, -1}});
  if (name == "kite")
    return make_mask("kite", {{0, 1}, {-1, 0}, {1, 0}, {1, 1}});
  if (name == "rocket")
    return make_mask("rocket", {{0, 1}, {-1, -1}, {1, -1}, {0, -1}, {-1, 0}, {1, 0}});
  if (name == "roof")
    return make_mask("roof", {{-1, 1}, {0, 1}, {1, 1}, {0, -1}});
  if (name == "l-shaped")
    return make_mask("l-shaped", {{0, 1}, {1, 0}});
  throw std::invalid_argument("unknown-name: no builtin mask '" + std::string(name) + "'");
}

// Reflections about the origin cell (a mask's center is its origin).
inline SymmetrySignature mask_symmetry(const Mask& m) {
  std::vector<detail::TaggedPoint> pts;
  pts.reserve(m.offsets.size());
  for (Point p : m.offsets) pts.push_back({p, 1});
  return detail::reflection_signature(std::move(pts), 0, 0);
}

// --- mask grid format -------------------------------------------------------
// 'o' marks the origin (exactly once), 'X' marks neighbors, '.' is empty,
// leading '#' lines are comments. First line is the top row. 'O' (an origin
// cell claimed as its own neighbor) is rejected.

inline Mask parse_mask(std::string_view text, std::string name = "") {
  std::vector<std::string> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) continue;
    rows.emplace_back(line);
  }
  if (rows.empty()) throw std::invalid_argument("empty-mask: blank mask grid");
  size_t w = rows[0].size();
  for (const std::string& r : rows)
    if (r.size() != w) throw std::invalid_argument("mask grid rows have unequal length");
  int h = int(rows.size());

  bool have_origin = false;
  Point origin{};
  std::vector<Point> cells;  // grid coords, y up: row 0 of file = y h-1
  for (int j = 0; j < h; ++j) {
    const std::string& row = rows[size_t(h - 1 - j)];
    for (int i = 0; i < int(w); ++i) {
      char c = row[size_t(i)];
      if (c == '.') continue;
      if (c == 'O')
        throw std::invalid_argument("origin-marked-as-neighbor: 'O' claims the origin as a neighbor");
      if (c == 'o') {
        if (have_origin) throw std::invalid_argument("multiple-origins: more than one 'o'");
        have_origin = true;
        origin = {i, j};
      } else if (c == 'X' || c == 'x') {
        cells.push_back({i, j});
      } else {
        throw std::invalid_argument(std::string("invalid mask character '") + c + "'");
      }
    }
  }
  if (!have_origin) throw std::invalid_argument("no-origin: mask grid lacks an 'o'");
  std::vector<Point> offsets;
  offsets.reserve(cells.size());
  for (Point c : cells) offsets.push_back(c - origin);
  return make_mask(std::move(name), std::move(offsets));
}

inline std::string format_mask(const Mask& m) {
  BoundingBox b;
  b.include({0, 0});
  for (Point p : m.offsets) b.include(p);
  std::string out;
  std::vector<Point> sorted = m.offsets;
  std::sort(sorted.begin(), sorted.end());
  for (int y = b.max_y; y >= b.min_y; --y) {
    for (int x = b.min_x; x <= b.max_x; ++x) {
      if (x == 0 && y == 0)
        out.push_back('o');
      else
        out.push_back(std::binary_search(sorted.begin(), sorted.end(), Point{x, y}) ? 'X' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace modlap
