#include <gtest/gtest.h>

#include "modlap/mask.hpp"
#include "support/oracle.hpp"

using namespace modlap;

TEST(Mask, BuiltinDegreesAndRadii) {
  EXPECT_EQ(builtin_mask("von-neumann").degree(), 4);
  EXPECT_EQ(builtin_mask("diag-neumann").degree(), 4);
  EXPECT_EQ(builtin_mask("moore").degree(), 8);
  EXPECT_EQ(builtin_mask("hexagonal").degree(), 6);
  EXPECT_EQ(builtin_mask("tannenbaum").degree(), 4);
  EXPECT_EQ(builtin_mask("kite").degree(), 4);
  EXPECT_EQ(builtin_mask("rocket").degree(), 6);
  EXPECT_EQ(builtin_mask("roof").degree(), 4);
  EXPECT_EQ(builtin_mask("l-shaped").degree(), 2);
  for (const auto& name : builtin_mask_names()) EXPECT_EQ(builtin_mask(name).radius(), 1);
  EXPECT_THROW(builtin_mask("nonsense"), std::invalid_argument);
}

TEST(Mask, NoOriginOffsetAllowed) {
  EXPECT_THROW(make_mask("bad", {{0, 0}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(make_mask("empty", {}), std::invalid_argument);
}

TEST(MaskSymmetry, Classes) {
  EXPECT_EQ(mask_symmetry(builtin_mask("von-neumann")).klass(), SymmetryClass::double_symmetric);
  EXPECT_EQ(mask_symmetry(builtin_mask("diag-neumann")).klass(), SymmetryClass::double_symmetric);
  EXPECT_EQ(mask_symmetry(builtin_mask("moore")).klass(), SymmetryClass::double_symmetric);
  EXPECT_EQ(mask_symmetry(builtin_mask("hexagonal")).klass(), SymmetryClass::single_axis);
  EXPECT_EQ(mask_symmetry(builtin_mask("tannenbaum")).klass(), SymmetryClass::single_axis);
  EXPECT_EQ(mask_symmetry(builtin_mask("rocket")).klass(), SymmetryClass::single_axis);
  EXPECT_EQ(mask_symmetry(builtin_mask("roof")).klass(), SymmetryClass::single_axis);
  EXPECT_EQ(mask_symmetry(builtin_mask("kite")).klass(), SymmetryClass::asymmetric);
}

TEST(MaskSymmetry, LShapedPairIsAntiDiagonalOnly) {
  SymmetrySignature s = mask_symmetry(builtin_mask("l-shaped"));
  EXPECT_FALSE(s.horizontal);
  EXPECT_FALSE(s.vertical);
  EXPECT_FALSE(s.main_diag);
  EXPECT_TRUE(s.anti_diag);
  EXPECT_EQ(s.klass(), SymmetryClass::single_axis);
}

TEST(MaskSymmetry, SingleAxisMasksMirrorLeftRight) {
  for (const char* name : {"tannenbaum", "rocket", "roof"}) {
    SymmetrySignature s = mask_symmetry(builtin_mask(name));
    EXPECT_TRUE(s.vertical) << name;
    EXPECT_FALSE(s.horizontal) << name;
  }
}

TEST(MaskSymmetry, AgreesWithOracleReflections) {
  for (const auto& name : builtin_mask_names()) {
    Mask m = builtin_mask(name);
    std::vector<std::pair<Point, int>> cells;
    for (Point p : m.offsets) cells.push_back({p, 1});
    SymmetrySignature s = mask_symmetry(m);
    EXPECT_EQ(s.horizontal, oracle::oracle_reflects(cells, 0, 0, 'h')) << name;
    EXPECT_EQ(s.vertical, oracle::oracle_reflects(cells, 0, 0, 'v')) << name;
    EXPECT_EQ(s.main_diag, oracle::oracle_reflects(cells, 0, 0, 'm')) << name;
    EXPECT_EQ(s.anti_diag, oracle::oracle_reflects(cells, 0, 0, 'a')) << name;
  }
}

TEST(MaskFormat, ParseBasics) {
  Mask m = parse_mask("# plus\n.X.\nXoX\n.X.\n", "plus");
  EXPECT_EQ(m.offsets, builtin_mask("von-neumann").offsets);
}

TEST(MaskFormat, OrientationTopRowIsPositiveY) {
  Mask m = parse_mask("X.\n.o\n");
  ASSERT_EQ(m.degree(), 1);
  EXPECT_EQ(m.offsets[0], (Point{-1, 1}));
}

TEST(MaskFormat, Errors) {
  EXPECT_THROW(parse_mask(".X.\nX.X\n.X.\n"), std::invalid_argument);       // no-origin
  EXPECT_THROW(parse_mask("oX\nXo\n"), std::invalid_argument);              // multiple-origins
  EXPECT_THROW(parse_mask(".X.\nXOX\n.X.\n"), std::invalid_argument);       // origin-marked-as-neighbor
  EXPECT_THROW(parse_mask(".X.\nXoQ\n.X.\n"), std::invalid_argument);       // invalid char
  EXPECT_THROW(parse_mask("# only comments\n"), std::invalid_argument);     // empty grid
  EXPECT_THROW(parse_mask("o..\n...\n"), std::invalid_argument);            // no neighbors
}

TEST(MaskFormat, RoundTripBitExact) {
  for (const auto& name : builtin_mask_names()) {
    Mask m = builtin_mask(name);
    std::string text = format_mask(m);
    Mask back = parse_mask(text, name);
    EXPECT_EQ(back.offsets, m.offsets) << name;
    EXPECT_EQ(format_mask(back), text) << name;
  }
}
