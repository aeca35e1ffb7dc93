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

#ifndef VGPN__NAV__PLANNER_HPP_
#define VGPN__NAV__PLANNER_HPP_

#include "vgpn/nav/grid.hpp"

#include <vector>

namespace vgpn::nav
{

struct PathPlan
{
  /// Start cell to goal cell inclusive.
  std::vector<Cell> cells;
  /// Points the robot drives through after leaving `start`: the centers of
  /// the intermediate cells followed by the exact goal point.
  std::vector<Eigen::Vector2d> waypoints;
  int straight_steps = 0;
  int diagonal_steps = 0;

  /// straight + sqrt(2) * diagonal, in cells.
  double cost_cells() const;
  double cost_meters(double resolution) const { return cost_cells() * resolution; }
};

/// 8-connected A* with octile heuristic on the grid inflated by
/// `robot_radius`. Diagonal moves cost sqrt(2) and may not cut the corner of
/// an occupied cell. Throws Error(StartOccupied), Error(GoalOccupied) or
/// Error(Unreachable).
PathPlan plan_path(
  const OccupancyGrid & grid, const Eigen::Vector2d & start, const Eigen::Vector2d & goal,
  double robot_radius);

/// Same search on a grid that is already inflated.
PathPlan plan_path_inflated(
  const OccupancyGrid & inflated, const Eigen::Vector2d & start, const Eigen::Vector2d & goal);

}  // namespace vgpn::nav

#endif  // VGPN__NAV__PLANNER_HPP_
