#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlap/lattice.hpp"

namespace modlap {

struct Palette {
  std::vector<std::array<uint8_t, 3>> colors;  // indexed by residue; 0 = background
};

// Background white, residue 1 black, then fixed distinct hues.
inline Palette default_palette(int K) {
  if (K < 2 || K > 12) throw std::invalid_argument("default palette covers 2 to 12 residues");
  static const std::array<uint8_t, 3> table[12] = {
      {255, 255, 255}, {0, 0, 0},       {200, 30, 30},   {30, 90, 200},
      {30, 160, 60},   {230, 160, 20},  {130, 40, 160},  {20, 170, 170},
      {240, 100, 160}, {110, 70, 30},   {150, 200, 40},  {90, 90, 90},
  };
  Palette p;
  p.colors.assign(table, table + K);
  return p;
}

// Text netpbm raster: P2 grayscale when only residues {0,1} are in play
// (background 255, foreground 0), P3 color otherwise. Each cell becomes a
// scale x scale block and a one-cell margin frames the box. An empty state
// renders as a single background pixel.
inline std::string render_pgm(const LatticeState& state, const Palette& palette, int scale = 1) {
  if (scale < 1) throw std::invalid_argument("render scale must be >= 1");
  if ((int)palette.colors.size() < state.modulus_bound())
    throw std::invalid_argument("palette too small for the state's residues");

  BoundingBox b = state.bounding_box();
  bool gray = state.modulus_bound() <= 2;
  std::string out;
  if (b.empty()) {
    out = gray ? "P2\n1 1\n255\n255\n" : "P3\n1 1\n255\n255 255 255\n";
    return out;
  }
  int w_px = (b.width() + 2) * scale, h_px = (b.height() + 2) * scale;
  out += gray ? "P2\n" : "P3\n";
  out += std::to_string(w_px) + " " + std::to_string(h_px) + "\n255\n";
  for (int py = 0; py < h_px; ++py) {
    int y = b.max_y + 1 - py / scale;  // top row first
    for (int px = 0; px < w_px; ++px) {
      int x = b.min_x - 1 + px / scale;
      uint8_t v = state.get(x, y);
      if (px) out += ' ';
      if (gray) {
        out += std::to_string(v ? 0 : 255);
      } else {
        const std::array<uint8_t, 3>& c = palette.colors[v];
        out += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace modlap
