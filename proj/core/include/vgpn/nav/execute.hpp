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

#ifndef VGPN__NAV__EXECUTE_HPP_
#define VGPN__NAV__EXECUTE_HPP_

#include "vgpn/lang/instruction.hpp"
#include "vgpn/nav/grid.hpp"
#include "vgpn/nav/robot.hpp"
#include "vgpn/world/target.hpp"

#include <Eigen/Core>

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace vgpn::nav
{

struct ExecutionParams
{
  double dt = 0.1;               // seconds between samples
  double goal_tolerance = 0.10;  // meters
  double forward_step = 1.0;     // meters for a bare move(forward)
};

enum class MotionEventKind { WaypointReached, Arrival, CollisionStop };

std::string_view to_string(MotionEventKind kind);

struct MotionEvent
{
  double time;
  MotionEventKind kind;
  std::size_t waypoint_index;  // WaypointReached only
  Eigen::Vector2d position;
};

struct TrajectorySample
{
  double time;
  Eigen::Vector2d position;
  double heading;
};

struct Trajectory
{
  std::vector<TrajectorySample> samples;  // first sample is the start state
  std::vector<Eigen::Vector2d> path;      // planned waypoints (goto only)
  std::vector<MotionEvent> events;
  bool collision_stop = false;
  bool arrived = false;

  double duration() const { return samples.empty() ? 0.0 : samples.back().time; }
};

/// Parsed form of a move/turn instruction.
struct MotionCommand
{
  double rotation = 0.0;     // radians, positive = left
  double translation = 0.0;  // meters, negative = backward
};

/// Throws Error(UnsupportedInstruction) for anything that is not a valid
/// move/turn/stop.
MotionCommand motion_command(const lang::Instruction & instr, double forward_step);

/// Where a move/turn/stop would end without obstacles.
RobotState predicted_pose(const lang::Instruction & instr, const RobotState & robot, double forward_step);

/// Simulates one instruction.
///
/// goto follows the A* path at `speed` with instant heading alignment per
/// segment; turn(dir[, angle, unit]) rotates at `turn_rate` (default 90
/// degrees); move(dir[, distance, meter]) rotates first for left/right, then
/// translates along the heading and stops before the inflated obstacle
/// boundary (collision_stop). Throws planner errors for goto and
/// Error(UnsupportedInstruction) for unknown verbs or a goto without goal.
Trajectory execute(
  const lang::Instruction & instr, const std::optional<world::NavigationGoal> & goal,
  const RobotState & robot, const OccupancyGrid & grid, const ExecutionParams & params = {});

/// CSV with header `time,x,y,heading`.
void write_trajectory_csv(std::ostream & out, const Trajectory & trajectory);

}  // namespace vgpn::nav

#endif  // VGPN__NAV__EXECUTE_HPP_
