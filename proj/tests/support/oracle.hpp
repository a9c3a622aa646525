#pragma once

// Deliberately naive reference implementations, written independently of the
// engine: dense padded arrays, direct definition transcription, exhaustive
// search. Test tree only; values derived here get frozen into expectations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "modlap/geom.hpp"
#include "modlap/lattice.hpp"
#include "modlap/mask.hpp"
#include "modlap/dynamics.hpp"

namespace oracle {

using modlap::LatticeState;
using modlap::Mask;
using modlap::Point;
using modlap::UpdateRule;

// One update computed cell-by-cell on a dense padded array straight from the
// rule definitions.
inline LatticeState oracle_step(const LatticeState& in, const Mask& mask, int k, UpdateRule rule) {
  auto supp = in.support();
  if (supp.empty()) {
    LatticeState e;
    e.set_modulus_bound(k);
    return e;
  }
  int r = 0;
  for (Point g : mask.offsets) r = std::max({r, std::abs(g.x), std::abs(g.y)});
  modlap::BoundingBox b = in.bounding_box();
  int x_lo = b.min_x - r, x_hi = b.max_x + r, y_lo = b.min_y - r, y_hi = b.max_y + r;
  LatticeState out(x_lo, y_lo, x_hi - x_lo + 1, y_hi - y_lo + 1, k);
  for (int y = y_lo; y <= y_hi; ++y)
    for (int x = x_lo; x <= x_hi; ++x) {
      long long acc = 0;
      if (rule == UpdateRule::laplacian) {
        for (Point g : mask.offsets) acc += (long long)in.get(x + g.x, y + g.y) - in.get(x, y);
      } else if (rule == UpdateRule::identity_plus_sum) {
        acc = in.get(x, y);
        for (Point g : mask.offsets) acc += in.get(x + g.x, y + g.y);
      } else {
        for (Point g : mask.offsets) acc += in.get(x + g.x, y + g.y);
      }
      long long m = acc % k;
      if (m < 0) m += k;
      out.set(x, y, uint8_t(m));
    }
  return out.tightened();
}

inline LatticeState oracle_run(LatticeState s, const Mask& mask, const std::vector<int>& moduli,
                               UpdateRule rule) {
  for (int k : moduli) s = oracle_step(s, mask, k, rule);
  return s;
}

// All ways to write G as a disjoint union of translated copies of F with
// residues matching exactly (or supports matching, in support-only mode).
// Each decomposition is the sorted list of shifts. Exhaustive backtracking,
// guarded to |support(G)| <= 64.
inline std::vector<std::vector<Point>> oracle_decompose(const LatticeState& F, const LatticeState& G,
                                                        bool support_only = false) {
  std::vector<Point> fs = F.support();
  std::vector<Point> gs = G.support();
  if (fs.empty()) throw std::invalid_argument("oracle_decompose: empty F");
  if (gs.size() > 64) throw std::invalid_argument("oracle_decompose: G support too large");

  std::map<Point, int> g_val;
  for (Point p : gs) g_val[p] = G.get(p);
  std::vector<std::vector<Point>> found;
  std::set<Point> covered;
  std::vector<Point> shifts;

  auto fits = [&](Point shift) {
    for (Point f : fs) {
      Point q = f + shift;
      auto it = g_val.find(q);
      if (it == g_val.end()) return false;
      if (!support_only && it->second != F.get(f)) return false;
      if (covered.count(q)) return false;
    }
    return true;
  };

  std::function<void()> rec = [&]() {
    Point anchor{};
    bool have = false;
    for (Point p : gs)
      if (!covered.count(p)) {
        anchor = p;
        have = true;
        break;
      }
    if (!have) {
      std::vector<Point> d = shifts;
      std::sort(d.begin(), d.end());
      found.push_back(d);
      return;
    }
    for (Point f : fs) {
      if (!support_only && F.get(f) != g_val[anchor]) continue;
      Point shift = anchor - f;
      if (!fits(shift)) continue;
      for (Point q : fs) covered.insert(q + shift);
      shifts.push_back(shift);
      rec();
      shifts.pop_back();
      for (Point q : fs) covered.erase(q + shift);
    }
  };
  rec();
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// Hull vertices by gift wrapping on the support points (independent of the
// engine's monotone chain).
inline std::vector<Point> oracle_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return {};
  if (pts.size() == 1) return pts;
  auto cross = [](Point o, Point a, Point b) {
    return (long long)(a.x - o.x) * (b.y - o.y) - (long long)(a.y - o.y) * (b.x - o.x);
  };
  auto dist2 = [](Point a, Point b) {
    return (long long)(a.x - b.x) * (a.x - b.x) + (long long)(a.y - b.y) * (a.y - b.y);
  };
  Point start = pts[0];
  for (Point p : pts)
    if (p.y < start.y || (p.y == start.y && p.x < start.x)) start = p;
  std::vector<Point> hull;
  Point cur = start;
  do {
    hull.push_back(cur);
    Point next = pts[0] == cur && pts.size() > 1 ? pts[1] : pts[0];
    for (Point cand : pts) {
      if (cand == cur) continue;
      long long c = cross(cur, next, cand);
      if (next == cur || c > 0 || (c == 0 && dist2(cur, cand) > dist2(cur, next))) next = cand;
    }
    cur = next;
    if (hull.size() > pts.size() + 1) throw std::runtime_error("oracle_hull: wrap failure");
  } while (cur != start);
  return hull;  // counterclockwise, collinear points skipped
}

// Reflection check from the definitions, support+value pairs, center given
// in doubled coordinates.
inline bool oracle_reflects(const std::vector<std::pair<Point, int>>& cells, int cx2, int cy2,
                            char axis) {
  std::set<std::pair<std::pair<int, int>, int>> base, image;
  for (auto& [p, v] : cells) base.insert({{2 * p.x, 2 * p.y}, v});
  for (auto& [p, v] : cells) {
    long long x2 = 2 * p.x, y2 = 2 * p.y, nx2, ny2;
    switch (axis) {
      case 'h': nx2 = x2; ny2 = 2LL * cy2 - y2; break;
      case 'v': nx2 = 2LL * cx2 - x2; ny2 = y2; break;
      case 'm': nx2 = cx2 - (y2 - cy2); ny2 = cy2 - (x2 - cx2); break;  // '\'
      default:  nx2 = cx2 + (y2 - cy2); ny2 = cy2 + (x2 - cx2); break;  // '/'
    }
    image.insert({{int(nx2), int(ny2)}, v});
  }
  return base == image;
}

// Exact multinomial coefficient reduced mod p, via a product of binomials in
// 64-bit integers (exact for t <= 20).
inline long long oracle_multinomial_mod(long long t, const std::vector<long long>& parts, long long p) {
  long long sum = 0;
  for (long long a : parts) sum += a;
  if (sum != t) throw std::invalid_argument("oracle_multinomial_mod: parts must sum to t");
  if (t > 20) throw std::invalid_argument("oracle_multinomial_mod: t too large for exact 64-bit");
  auto binom = [](long long n, long long r) {
    unsigned long long acc = 1;
    for (long long i = 1; i <= r; ++i) acc = acc * (unsigned long long)(n - r + i) / (unsigned long long)i;
    return acc;
  };
  unsigned long long coeff = 1;
  long long used = 0;
  for (long long a : parts) {
    used += a;
    coeff *= binom(used, a);
  }
  return (long long)(coeff % (unsigned long long)p);
}

}  // namespace oracle
