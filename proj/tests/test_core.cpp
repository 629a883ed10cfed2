#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "wavebound/core.hpp"
#include "wavebound/errors.hpp"

using namespace wavebound;

TEST(BuildGrid, UnitIntervalHundredCells) {
  const Grid1D g = build_grid(100, 0.0, 1.0);
  EXPECT_EQ(g.n_cells, 100u);
  EXPECT_DOUBLE_EQ(g.dx, 0.01);
  EXPECT_DOUBLE_EQ(g.center(0), 0.005);
  EXPECT_DOUBLE_EQ(g.center(99), 0.995);
  EXPECT_EQ(g.boundary, Boundary::Periodic);
}

TEST(BuildGrid, OffsetInterval) {
  const Grid1D g = build_grid(4, -1.0, 1.0);
  EXPECT_DOUBLE_EQ(g.dx, 0.5);
  const auto x = g.centers();
  ASSERT_EQ(x.size(), 4u);
  EXPECT_DOUBLE_EQ(x[0], -0.75);
  EXPECT_DOUBLE_EQ(x[3], 0.75);
}

TEST(BuildGrid, WidthsSumToLength) {
  for (std::size_t n : {1u, 7u, 100u, 1000u}) {
    const Grid1D g = build_grid(n, -2.5, 3.25);
    EXPECT_NEAR(g.dx * static_cast<double>(n), g.length(), 1e-12);
  }
}

TEST(BuildGrid, RejectsBadInput) {
  EXPECT_THROW(build_grid(0, 0.0, 1.0), InvalidArgument);
  EXPECT_THROW(build_grid(10, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(build_grid(10, 1.0, 0.0), InvalidArgument);
}

TEST(CourantPair, ValidatesComponents) {
  const CourantPair p = make_courant_pair(0.3, 0.4);
  EXPECT_DOUBLE_EQ(p.cx, 0.3);
  EXPECT_DOUBLE_EQ(p.cy, 0.4);
  EXPECT_NO_THROW(make_courant_pair(0.0, 0.0));
  EXPECT_THROW(make_courant_pair(-0.1, 0.2), InvalidArgument);
  EXPECT_THROW(make_courant_pair(0.1, std::numeric_limits<double>::quiet_NaN()), InvalidArgument);
}

TEST(RunConfig, Validation) {
  EXPECT_NO_THROW(validate(RunConfig{}));
  EXPECT_NO_THROW(validate(RunConfig{1.0, 0.0, 0.0}));
  EXPECT_THROW(validate(RunConfig{0.0, 1.0, 0.5}), InvalidArgument);
  EXPECT_THROW(validate(RunConfig{1.5, 1.0, 0.5}), InvalidArgument);
  EXPECT_THROW(validate(RunConfig{0.9, -1.0, 0.5}), InvalidArgument);
  EXPECT_THROW(validate(RunConfig{0.9, 1.0, -0.5}), InvalidArgument);
}
