#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "modlap/lattice.hpp"

namespace modlap {

enum class SizeClass { small, medium, large };

// Enclosing-square sides per class; a seed is small iff it fits 3x3,
// medium iff it fits 18x18, large otherwise (catalog caps large at 84x84).
inline int size_class_side(SizeClass c) {
  switch (c) {
    case SizeClass::small: return 3;
    case SizeClass::medium: return 18;
    default: return 84;
  }
}

inline SizeClass classify_size(const LatticeState& s) {
  BoundingBox b = s.bounding_box();
  int side = std::max(b.width(), b.height());
  if (side <= 3) return SizeClass::small;
  if (side <= 18) return SizeClass::medium;
  return SizeClass::large;
}

inline const std::vector<std::string>& builtin_seed_names() {
  static const std::vector<std::string> names = {"point", "neumann", "diag", "moore", "peano"};
  return names;
}

inline LatticeState builtin_seed(std::string_view name) {
  auto from_cells = [](std::initializer_list<Point> cells) {
    BoundingBox b;
    for (Point p : cells) b.include(p);
    LatticeState s(b.min_x, b.min_y, b.width(), b.height(), 2);
    for (Point p : cells) s.set(p, 1);
    return s;
  };
  if (name == "point") return from_cells({{0, 0}});
  if (name == "neumann") return from_cells({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  if (name == "diag") return from_cells({{0, 0}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  if (name == "moore")
    return from_cells({{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {0, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}});
  // Catalog default for peano: 3x3 checkerboard with five 1s (corners +
  // center); also shipped as data/seeds/peano.seed.
  if (name == "peano") return from_cells({{0, 0}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  throw std::invalid_argument("unknown-name: no builtin seed '" + std::string(name) + "'");
}

// Bernoulli 0/1 fill of a side x side square centered on the origin.
// Resamples the whole square until the result is nonempty. The bit draw is
// spelled out (not std::bernoulli_distribution) so output is identical
// across standard libraries for a given rng_seed.
inline LatticeState random_seed_square(int side, double fill_probability, uint64_t rng_seed) {
  if (side < 1) throw std::invalid_argument("seed square side must be >= 1");
  if (fill_probability < 0.0 || fill_probability > 1.0)
    throw std::invalid_argument("fill probability outside [0,1]");
  if (fill_probability == 0.0)
    throw std::invalid_argument("fill probability 0 cannot produce a nonempty seed");
  std::mt19937 eng{uint32_t(rng_seed)};
  int x0 = -(side - 1) / 2, y0 = -(side - 1) / 2;
  for (;;) {
    LatticeState s(x0, y0, side, side, 2);
    bool any = false;
    for (int j = 0; j < side; ++j)
      for (int i = 0; i < side; ++i) {
        double u = double(eng() >> 8) * (1.0 / 16777216.0);
        if (u < fill_probability) {
          s.set(x0 + i, y0 + j, 1);
          any = true;
        }
      }
    if (any) return s.tightened();
  }
}

inline LatticeState random_seed(SizeClass size_class, double fill_probability, uint64_t rng_seed) {
  return random_seed_square(size_class_side(size_class), fill_probability, rng_seed);
}

}  // namespace modlap
