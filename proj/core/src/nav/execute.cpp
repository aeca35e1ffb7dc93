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

#include "vgpn/nav/execute.hpp"

#include "vgpn/error.hpp"
#include "vgpn/nav/planner.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <string>

namespace vgpn::nav
{
namespace
{

double parse_number(const std::string & s)
{
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) {
      return v;
    }
  } catch (const std::exception &) {
  }
  throw Error(ErrorCode::UnsupportedInstruction, "'" + s + "' is not a number");
}

class Simulator
{
public:
  Simulator(const RobotState & robot, const ExecutionParams & params)
  : robot_(robot), params_(params)
  {
    if (!(params_.dt > 0.0)) {
      throw Error(ErrorCode::UnsupportedInstruction, "dt must be positive");
    }
    out_.samples.push_back({0.0, robot_.position, robot_.heading});
  }

  void rotate(double angle)
  {
    const double start = robot_.heading;
    const double step = robot_.turn_rate * params_.dt;
    double done = 0.0;
    const double total = std::abs(angle);
    const double sign = angle < 0.0 ? -1.0 : 1.0;
    while (done < total) {
      done = std::min(total, done + step);
      robot_.heading = wrap_angle(start + sign * done);
      tick();
    }
  }

  void translate(double distance, const OccupancyGrid & inflated)
  {
    const double sign = distance < 0.0 ? -1.0 : 1.0;
    const Eigen::Vector2d dir = sign * Eigen::Vector2d(std::cos(robot_.heading), std::sin(robot_.heading));
    const double probe = inflated.resolution() / 4.0;
    double remaining = std::abs(distance);
    while (remaining > 1e-12) {
      const double move = std::min(remaining, robot_.speed * params_.dt);
      double advanced = 0.0;
      bool blocked = false;
      while (advanced < move) {
        const double next = std::min(move, advanced + probe);
        if (!inflated.is_free(robot_.position + next * dir)) {
          blocked = true;
          break;
        }
        advanced = next;
      }
      robot_.position += advanced * dir;
      remaining -= advanced;
      tick();
      if (blocked) {
        out_.collision_stop = true;
        out_.events.push_back({time_, MotionEventKind::CollisionStop, 0, robot_.position});
        return;
      }
    }
  }

  void follow(const std::vector<Eigen::Vector2d> & waypoints, const Eigen::Vector2d & goal)
  {
    out_.path = waypoints;
    std::size_t next = 0;
    while (next < waypoints.size()) {
      double budget = robot_.speed * params_.dt;
      std::vector<std::size_t> reached;
      while (budget > 0.0 && next < waypoints.size()) {
        const Eigen::Vector2d delta = waypoints[next] - robot_.position;
        const double d = delta.norm();
        if (d > 1e-12) {
          robot_.heading = std::atan2(delta.y(), delta.x());
        }
        if (d <= budget) {
          robot_.position = waypoints[next];
          budget -= d;
          reached.push_back(next++);
        } else {
          robot_.position += budget * delta / d;
          budget = 0.0;
        }
      }
      tick();
      for (std::size_t i : reached) {
        out_.events.push_back({time_, MotionEventKind::WaypointReached, i, waypoints[i]});
      }
    }
    if ((robot_.position - goal).norm() <= params_.goal_tolerance) {
      out_.arrived = true;
      out_.events.push_back({time_, MotionEventKind::Arrival, 0, robot_.position});
    }
  }

  Trajectory take() { return std::move(out_); }

private:
  void tick()
  {
    ++steps_;
    time_ = static_cast<double>(steps_) * params_.dt;
    out_.samples.push_back({time_, robot_.position, robot_.heading});
  }

  RobotState robot_;
  ExecutionParams params_;
  Trajectory out_;
  std::size_t steps_ = 0;
  double time_ = 0.0;
};

}  // namespace

std::string_view to_string(MotionEventKind kind)
{
  switch (kind) {
    case MotionEventKind::WaypointReached: return "waypoint_reached";
    case MotionEventKind::Arrival: return "arrival";
    case MotionEventKind::CollisionStop: return "collision";
  }
  return "?";
}

MotionCommand motion_command(const lang::Instruction & instr, double forward_step)
{
  const auto & args = instr.args;
  auto fail = [&](const std::string & why) {
    throw Error(ErrorCode::UnsupportedInstruction, instr.to_string() + ": " + why);
  };
  if (instr.verb == "stop") {
    if (!args.empty()) {
      fail("stop takes no arguments");
    }
    return {};
  }
  if (instr.verb != "move" && instr.verb != "turn") {
    fail("not a motion verb");
  }
  if (args.empty() || args.size() > 3) {
    fail("expected direction[, amount[, unit]]");
  }
  const std::string & dir = args[0];
  std::optional<double> amount;
  std::string unit;
  if (args.size() >= 2) {
    amount = parse_number(args[1]);
    if (*amount < 0.0) {
      fail("negative amount");
    }
  }
  if (args.size() == 3) {
    unit = args[2];
  }

  constexpr double kPi = std::numbers::pi;
  MotionCommand cmd;
  if (instr.verb == "turn") {
    double angle = kPi / 2.0;
    if (amount) {
      if (unit.empty() || unit == "degree") {
        angle = *amount * kPi / 180.0;
      } else if (unit == "radian") {
        angle = *amount;
      } else {
        fail("turn amount must be in degree or radian");
      }
    }
    if (dir == "left") {
      cmd.rotation = angle;
    } else if (dir == "right") {
      cmd.rotation = -angle;
    } else if (dir == "backward" && !amount) {
      cmd.rotation = kPi;
    } else {
      fail("turn direction must be left or right");
    }
    return cmd;
  }

  double distance = forward_step;
  if (amount) {
    if (!unit.empty() && unit != "meter") {
      fail("move distance must be in meter");
    }
    distance = *amount;
  }
  if (dir == "forward") {
    cmd.translation = distance;
  } else if (dir == "backward") {
    cmd.translation = -distance;
  } else if (dir == "left") {
    cmd.rotation = kPi / 2.0;
    cmd.translation = distance;
  } else if (dir == "right") {
    cmd.rotation = -kPi / 2.0;
    cmd.translation = distance;
  } else {
    fail("unknown direction '" + dir + "'");
  }
  return cmd;
}

RobotState predicted_pose(const lang::Instruction & instr, const RobotState & robot, double forward_step)
{
  const MotionCommand cmd = motion_command(instr, forward_step);
  RobotState out = robot;
  out.heading = wrap_angle(robot.heading + cmd.rotation);
  out.position += cmd.translation * Eigen::Vector2d(std::cos(out.heading), std::sin(out.heading));
  return out;
}

Trajectory execute(
  const lang::Instruction & instr, const std::optional<world::NavigationGoal> & goal,
  const RobotState & robot, const OccupancyGrid & grid, const ExecutionParams & params)
{
  Simulator sim(robot, params);
  if (instr.verb == "goto") {
    if (!goal) {
      throw Error(ErrorCode::UnsupportedInstruction, "goto needs a navigation goal");
    }
    const PathPlan plan = plan_path(grid, robot.position, goal->position, robot.radius);
    sim.follow(plan.waypoints, goal->position);
    return sim.take();
  }
  const MotionCommand cmd = motion_command(instr, params.forward_step);
  if (cmd.rotation != 0.0) {
    sim.rotate(cmd.rotation);
  }
  if (cmd.translation != 0.0) {
    sim.translate(cmd.translation, grid.inflated(robot.radius));
  }
  Trajectory out = sim.take();
  if (!out.collision_stop) {
    out.arrived = true;
    out.events.push_back({out.duration(), MotionEventKind::Arrival, 0, out.samples.back().position});
  }
  return out;
}

void write_trajectory_csv(std::ostream & out, const Trajectory & trajectory)
{
  out << "time,x,y,heading\n";
  out << std::setprecision(9);
  for (const auto & s : trajectory.samples) {
    out << s.time << ',' << s.position.x() << ',' << s.position.y() << ',' << s.heading << '\n';
  }
}

}  // namespace vgpn::nav
