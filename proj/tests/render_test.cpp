#include <gtest/gtest.h>

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "modlap/render.hpp"
#include "modlap/seed.hpp"

using namespace modlap;

namespace {

struct Raster {
  std::string magic;
  int width = 0, height = 0, maxval = 0;
  std::vector<std::array<int, 3>> pixels;  // gray replicated across channels
};

Raster parse_netpbm(const std::string& text) {
  std::istringstream in(text);
  Raster r;
  in >> r.magic >> r.width >> r.height >> r.maxval;
  bool gray = r.magic == "P2";
  int v0 = 0, v1 = 0, v2 = 0;
  while (in >> v0) {
    if (!gray) {
      in >> v1 >> v2;
      r.pixels.push_back({v0, v1, v2});
    } else {
      r.pixels.push_back({v0, v0, v0});
    }
  }
  return r;
}

int count_pixels(const Raster& r, std::array<int, 3> color) {
  int n = 0;
  for (const auto& p : r.pixels)
    if (p == color) ++n;
  return n;
}

}  // namespace

TEST(Palette, BackgroundWhiteForegroundBlack) {
  Palette p = default_palette(3);
  ASSERT_EQ(p.colors.size(), 3u);
  EXPECT_EQ(p.colors[0], (std::array<uint8_t, 3>{255, 255, 255}));
  EXPECT_EQ(p.colors[1], (std::array<uint8_t, 3>{0, 0, 0}));
  EXPECT_EQ(default_palette(12).colors.size(), 12u);
}

TEST(Palette, CoversTwoToTwelveResiduesOnly) {
  EXPECT_THROW(default_palette(1), std::invalid_argument);
  EXPECT_THROW(default_palette(13), std::invalid_argument);
}

TEST(Render, PointSeedGrayscaleGolden) {
  EXPECT_EQ(render_pgm(builtin_seed("point"), default_palette(2)),
            "P2\n3 3\n255\n"
            "255 255 255\n"
            "255 0 255\n"
            "255 255 255\n");
}

TEST(Render, ResiduesAboveOneSwitchToColorGolden) {
  EXPECT_EQ(render_pgm(parse_figure("12\n"), default_palette(3)),
            "P3\n4 3\n255\n"
            "255 255 255 255 255 255 255 255 255 255 255 255\n"
            "255 255 255 0 0 0 200 30 30 255 255 255\n"
            "255 255 255 255 255 255 255 255 255 255 255 255\n");
}

TEST(Render, EmptyStateIsOneBackgroundPixel) {
  EXPECT_EQ(render_pgm(LatticeState{}, default_palette(2)), "P2\n1 1\n255\n255\n");
  LatticeState wide;
  wide.set_modulus_bound(3);
  EXPECT_EQ(render_pgm(wide, default_palette(3)), "P3\n1 1\n255\n255 255 255\n");
}

TEST(Render, ScaleBlowsUpCellsIntoBlocks) {
  Raster r = parse_netpbm(render_pgm(parse_figure("12\n"), default_palette(3), 2));
  EXPECT_EQ(r.magic, "P3");
  // (box + 2-cell margin) x scale on both axes.
  EXPECT_EQ(r.width, 8);
  EXPECT_EQ(r.height, 6);
  ASSERT_EQ(r.pixels.size(), 48u);
  EXPECT_EQ(count_pixels(r, {0, 0, 0}), 4);
  EXPECT_EQ(count_pixels(r, {200, 30, 30}), 4);
  EXPECT_EQ(count_pixels(r, {255, 255, 255}), 40);
}

TEST(Render, MarginFramesTheBoundingBox) {
  Raster r = parse_netpbm(render_pgm(builtin_seed("moore"), default_palette(2), 3));
  // moore seed is a 3x3 block; with the margin that is a 5x5 cell frame.
  EXPECT_EQ(r.width, 15);
  EXPECT_EQ(r.height, 15);
  EXPECT_EQ(count_pixels(r, {0, 0, 0}), 9 * 9);
  // The whole first pixel row is background margin.
  for (int px = 0; px < r.width; ++px) EXPECT_EQ(r.pixels[size_t(px)][0], 255);
}

TEST(Render, RejectsBadArguments) {
  EXPECT_THROW(render_pgm(builtin_seed("point"), default_palette(2), 0), std::invalid_argument);
  // Residue 2 present but only a two-color palette supplied.
  EXPECT_THROW(render_pgm(parse_figure("12\n"), default_palette(2)), std::invalid_argument);
}
