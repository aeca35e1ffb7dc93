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

#include "vgpn/nav/planner.hpp"

#include "vgpn/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace vgpn::nav
{
namespace
{

constexpr double kSqrt2 = std::numbers::sqrt2;

struct Neighbor
{
  int dx;
  int dy;
  bool diagonal;
};

constexpr Neighbor kNeighbors[] = {
  {1, 0, false}, {-1, 0, false}, {0, 1, false}, {0, -1, false},
  {1, 1, true},  {1, -1, true},  {-1, 1, true}, {-1, -1, true},
};

double octile(const Cell & a, const Cell & b)
{
  const int dx = std::abs(a.x - b.x);
  const int dy = std::abs(a.y - b.y);
  return (kSqrt2 - 1.0) * std::min(dx, dy) + std::max(dx, dy);
}

struct OpenEntry
{
  double f;
  double g;
  int index;

  bool operator>(const OpenEntry & other) const
  {
    if (f != other.f) {
      return f > other.f;
    }
    return g < other.g;  // deeper node first among equal f
  }
};

}  // namespace

double PathPlan::cost_cells() const
{
  return static_cast<double>(straight_steps) + kSqrt2 * static_cast<double>(diagonal_steps);
}

PathPlan plan_path(
  const OccupancyGrid & grid, const Eigen::Vector2d & start, const Eigen::Vector2d & goal,
  double robot_radius)
{
  return plan_path_inflated(grid.inflated(robot_radius), start, goal);
}

PathPlan plan_path_inflated(
  const OccupancyGrid & grid, const Eigen::Vector2d & start, const Eigen::Vector2d & goal)
{
  const Cell start_cell = grid.cell_of(start);
  const Cell goal_cell = grid.cell_of(goal);
  if (grid.occupied(start_cell)) {
    throw Error(ErrorCode::StartOccupied, "start lies in an occupied or inflated cell");
  }
  if (grid.occupied(goal_cell)) {
    throw Error(ErrorCode::GoalOccupied, "goal lies in an occupied or inflated cell");
  }

  const int w = grid.width();
  const int n = w * grid.height();
  auto index_of = [w](const Cell & c) { return c.y * w + c.x; };
  auto cell_at = [w](int i) { return Cell{i % w, i / w}; };

  std::vector<double> g(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> closed(static_cast<std::size_t>(n), 0);
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<>> open;

  const int start_index = index_of(start_cell);
  const int goal_index = index_of(goal_cell);
  g[static_cast<std::size_t>(start_index)] = 0.0;
  open.push({octile(start_cell, goal_cell), 0.0, start_index});

  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    const auto ti = static_cast<std::size_t>(top.index);
    if (closed[ti]) {
      continue;
    }
    closed[ti] = 1;
    if (top.index == goal_index) {
      break;
    }
    const Cell c = cell_at(top.index);
    for (const auto & nb : kNeighbors) {
      const Cell next{c.x + nb.dx, c.y + nb.dy};
      if (grid.occupied(next)) {
        continue;
      }
      if (nb.diagonal && (grid.occupied(Cell{c.x + nb.dx, c.y}) || grid.occupied(Cell{c.x, c.y + nb.dy}))) {
        continue;
      }
      const int ni = index_of(next);
      const auto nu = static_cast<std::size_t>(ni);
      if (closed[nu]) {
        continue;
      }
      const double candidate = g[ti] + (nb.diagonal ? kSqrt2 : 1.0);
      if (candidate < g[nu]) {
        g[nu] = candidate;
        parent[nu] = top.index;
        open.push({candidate + octile(next, goal_cell), candidate, ni});
      }
    }
  }

  if (!closed[static_cast<std::size_t>(goal_index)]) {
    throw Error(ErrorCode::Unreachable, "no collision-free path to the goal");
  }

  PathPlan plan;
  for (int i = goal_index; i != -1; i = parent[static_cast<std::size_t>(i)]) {
    plan.cells.push_back(cell_at(i));
  }
  std::reverse(plan.cells.begin(), plan.cells.end());
  for (std::size_t i = 1; i < plan.cells.size(); ++i) {
    const bool diagonal = plan.cells[i].x != plan.cells[i - 1].x && plan.cells[i].y != plan.cells[i - 1].y;
    (diagonal ? plan.diagonal_steps : plan.straight_steps)++;
    if (i + 1 < plan.cells.size()) {
      plan.waypoints.push_back(grid.center_of(plan.cells[i]));
    }
  }
  plan.waypoints.push_back(goal);
  return plan;
}

}  // namespace vgpn::nav
