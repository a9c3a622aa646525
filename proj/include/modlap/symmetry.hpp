#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "modlap/geom.hpp"

namespace modlap {

enum class SymmetryClass { double_symmetric, single_axis, asymmetric };

// Reflection flags of a point set (optionally value-tagged) about a fixed
// center. Axis names follow the drawn orientation with y up: "main" is the
// '\' axis (line y = -x through the center), "anti" is '/' (y = x).
struct SymmetrySignature {
  bool horizontal = false;  // mirror across the horizontal axis (y -> -y)
  bool vertical = false;    // mirror across the vertical axis (x -> -x)
  bool main_diag = false;
  bool anti_diag = false;

  int axis_count() const {
    return int(horizontal) + int(vertical) + int(main_diag) + int(anti_diag);
  }
  SymmetryClass klass() const {
    int n = axis_count();
    if (n == 4) return SymmetryClass::double_symmetric;
    if (n == 0) return SymmetryClass::asymmetric;
    return SymmetryClass::single_axis;
  }
  friend bool operator==(const SymmetrySignature&, const SymmetrySignature&) = default;
};

inline const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::double_symmetric: return "double-symmetric";
    case SymmetryClass::single_axis: return "single-axis";
    default: return "asymmetric";
  }
}

namespace detail {

// Cells carry a value so residue-exact symmetry can share this machinery;
// support-only callers pass a constant value.
struct TaggedPoint {
  Point p;
  int v;
  friend auto operator<=>(const TaggedPoint&, const TaggedPoint&) = default;
};

// Reflections about a possibly half-integer center are done in doubled
// coordinates: the center (cx2/2, cy2/2) stays integral as (cx2, cy2).
inline SymmetrySignature reflection_signature(std::vector<TaggedPoint> pts, int cx2, int cy2) {
  std::sort(pts.begin(), pts.end());
  auto invariant_under = [&](auto&& map) {
    std::vector<TaggedPoint> img;
    img.reserve(pts.size());
    for (const TaggedPoint& t : pts) {
      auto [x2, y2] = map(2 * t.p.x, 2 * t.p.y);
      if (x2 % 2 != 0 || y2 % 2 != 0) return false;  // lands off-lattice
      img.push_back({{int(x2 / 2), int(y2 / 2)}, t.v});
    }
    std::sort(img.begin(), img.end());
    return img == pts;
  };
  SymmetrySignature s;
  s.horizontal = invariant_under([&](long long x2, long long y2) {
    return std::pair<long long, long long>{x2, 2LL * cy2 - y2};
  });
  s.vertical = invariant_under([&](long long x2, long long y2) {
    return std::pair<long long, long long>{2LL * cx2 - x2, y2};
  });
  // '\' axis: (x,y) -> (cx - (y - cy), cy - (x - cx)) in real coords.
  s.main_diag = invariant_under([&](long long x2, long long y2) {
    return std::pair<long long, long long>{cx2 - (y2 - cy2), cy2 - (x2 - cx2)};
  });
  // '/' axis: (x,y) -> (cx + (y - cy), cy + (x - cx)).
  s.anti_diag = invariant_under([&](long long x2, long long y2) {
    return std::pair<long long, long long>{cx2 + (y2 - cy2), cy2 + (x2 - cx2)};
  });
  return s;
}

}  // namespace detail

}  // namespace modlap
