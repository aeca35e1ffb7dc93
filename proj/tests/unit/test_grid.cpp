// Copyright 2026 The VGPN Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vgpn/error.hpp"
#include "vgpn/nav/grid.hpp"
#include "vgpn/nav/robot.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace vgpn::nav
{
namespace
{

TEST(Grid, Construction)
{
  EXPECT_THROW(OccupancyGrid(0.0, 2, 2, Eigen::Vector2d::Zero(), std::vector<std::uint8_t>(4)), Error);
  EXPECT_THROW(OccupancyGrid(0.1, 2, 2, Eigen::Vector2d::Zero(), std::vector<std::uint8_t>(3)), Error);
  const OccupancyGrid g(0.1, 2, 1, Eigen::Vector2d::Zero(), {0, 7});
  EXPECT_EQ(g.cells(), (std::vector<std::uint8_t>{0, 1}));
}

TEST(Grid, CellGeometry)
{
  auto g = OccupancyGrid::empty(0.5, 4, 2, Eigen::Vector2d(-1.0, 2.0));
  EXPECT_EQ(g.cell_of({-1.0, 2.0}), (Cell{0, 0}));
  EXPECT_EQ(g.cell_of({-0.51, 2.99}), (Cell{0, 1}));
  EXPECT_EQ(g.cell_of({0.99, 2.0}), (Cell{3, 0}));
  EXPECT_EQ(g.center_of({3, 1}), Eigen::Vector2d(0.75, 2.75));
  EXPECT_FALSE(g.contains({1.0, 2.0}));
  EXPECT_FALSE(g.contains({-1.01, 2.5}));
  EXPECT_TRUE(g.occupied({-1, 0}));
  EXPECT_TRUE(g.occupied({4, 0}));
  EXPECT_FALSE(g.occupied({1, 1}));
  EXPECT_FALSE(g.is_free({5.0, 5.0}));
  g.set_occupied({1, 1}, true);
  EXPECT_TRUE(g.occupied({1, 1}));
  g.set_occupied({9, 9}, true);
}

TEST(Grid, InflationMatchesBruteForce)
{
  std::mt19937_64 rng(31);
  std::bernoulli_distribution wall(0.05);
  for (double radius : {0.0, 0.05, 0.1, 0.18, 0.25, 0.3}) {
    auto g = OccupancyGrid::empty(0.05, 30, 20, Eigen::Vector2d(1.0, -1.0));
    for (int y = 0; y < 20; ++y) {
      for (int x = 0; x < 30; ++x) {
        g.set_occupied({x, y}, wall(rng));
      }
    }
    const auto inflated = g.inflated(radius);
    for (int y = 0; y < 20; ++y) {
      for (int x = 0; x < 30; ++x) {
        bool expect = false;
        for (int v = 0; v < 20 && !expect; ++v) {
          for (int u = 0; u < 30 && !expect; ++u) {
            if (g.occupied({u, v})) {
              const double d = (g.center_of({u, v}) - g.center_of({x, y})).norm();
              expect = d <= radius + 1e-9;
            }
          }
        }
        EXPECT_EQ(inflated.occupied({x, y}), expect) << x << "," << y << " r=" << radius;
      }
    }
  }
}

TEST(Robot, WrapAngle)
{
  constexpr double pi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(wrap_angle(0.0), 0.0);
  EXPECT_DOUBLE_EQ(wrap_angle(pi), pi);
  EXPECT_DOUBLE_EQ(wrap_angle(-pi), pi);
  EXPECT_NEAR(wrap_angle(3 * pi / 2), -pi / 2, 1e-12);
  EXPECT_NEAR(wrap_angle(-5 * pi / 2), -pi / 2, 1e-12);
  EXPECT_NEAR(wrap_angle(7.0), 7.0 - 2 * pi, 1e-12);
}

}  // namespace
}  // namespace vgpn::nav
