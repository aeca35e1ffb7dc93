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

// A* on open and cluttered square grids.

#include "vgpn/error.hpp"
#include "vgpn/nav/planner.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace
{

void bm_plan(benchmark::State & state)
{
  using namespace vgpn::nav;
  const int n = static_cast<int>(state.range(0));
  const double density = static_cast<double>(state.range(1)) / 100.0;
  auto grid = OccupancyGrid::empty(0.1, n, n, Eigen::Vector2d::Zero());
  std::mt19937_64 rng(1);
  std::bernoulli_distribution wall(density);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      grid.set_occupied({x, y}, wall(rng));
    }
  }
  grid.set_occupied({0, 0}, false);
  grid.set_occupied({n - 1, n - 1}, false);
  const auto start = grid.center_of({0, 0});
  const auto goal = grid.center_of({n - 1, n - 1});
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(plan_path(grid, start, goal, 0.04));
    } catch (const vgpn::Error &) {
    }
  }
}
BENCHMARK(bm_plan)->Args({64, 0})->Args({64, 20})->Args({256, 0})->Args({256, 20});

}  // namespace
