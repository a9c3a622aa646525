#include <gtest/gtest.h>

#include "modlap/seed.hpp"

using namespace modlap;

TEST(Seed, BuiltinSupports) {
  EXPECT_EQ(builtin_seed("point").support_size(), 1);
  EXPECT_EQ(builtin_seed("neumann").support_size(), 5);
  EXPECT_EQ(builtin_seed("diag").support_size(), 5);
  EXPECT_EQ(builtin_seed("moore").support_size(), 9);
  EXPECT_EQ(builtin_seed("peano").support_size(), 5);
  EXPECT_THROW(builtin_seed("nonsense"), std::invalid_argument);
}

TEST(Seed, BuiltinGeometry) {
  LatticeState plus = builtin_seed("neumann");
  EXPECT_EQ(plus.get(0, 0), 1);
  EXPECT_EQ(plus.get(1, 0), 1);
  EXPECT_EQ(plus.get(1, 1), 0);
  LatticeState diag = builtin_seed("diag");
  EXPECT_EQ(diag.get(1, 1), 1);
  EXPECT_EQ(diag.get(1, 0), 0);
  // Catalog peano coincides with diag (corners + center); editorial default.
  EXPECT_EQ(builtin_seed("peano"), builtin_seed("diag"));
}

TEST(Seed, SizeClasses) {
  EXPECT_EQ(classify_size(builtin_seed("point")), SizeClass::small);
  EXPECT_EQ(classify_size(builtin_seed("moore")), SizeClass::small);
  EXPECT_EQ(classify_size(random_seed_square(10, 1.0, 1)), SizeClass::medium);
  EXPECT_EQ(classify_size(random_seed_square(30, 1.0, 1)), SizeClass::large);
  EXPECT_EQ(size_class_side(SizeClass::small), 3);
  EXPECT_EQ(size_class_side(SizeClass::medium), 18);
  EXPECT_EQ(size_class_side(SizeClass::large), 84);
}

TEST(Seed, RandomDeterministicPerRngSeed) {
  LatticeState a = random_seed(SizeClass::medium, 0.4, 12345);
  LatticeState b = random_seed(SizeClass::medium, 0.4, 12345);
  EXPECT_EQ(a, b);
  LatticeState c = random_seed(SizeClass::medium, 0.4, 54321);
  EXPECT_FALSE(a == c);
  EXPECT_GT(a.support_size(), 0);
}

TEST(Seed, RandomRespectsSizeClass) {
  for (uint64_t r = 0; r < 20; ++r) {
    LatticeState s = random_seed(SizeClass::small, 0.5, r + 1);
    BoundingBox b = s.bounding_box();
    EXPECT_LE(b.width(), 3);
    EXPECT_LE(b.height(), 3);
    EXPECT_GT(s.support_size(), 0);
  }
}

TEST(Seed, RandomLowFillResamplesUntilNonempty) {
  LatticeState s = random_seed(SizeClass::small, 0.01, 7);
  EXPECT_GT(s.support_size(), 0);
  EXPECT_THROW(random_seed(SizeClass::small, 0.0, 7), std::invalid_argument);
  EXPECT_THROW(random_seed(SizeClass::small, 1.5, 7), std::invalid_argument);
}

TEST(Seed, FigureFileRoundTrip) {
  for (const auto& name : builtin_seed_names()) {
    LatticeState s = builtin_seed(name);
    EXPECT_EQ(parse_figure(format_figure(s)), s) << name;
  }
}
