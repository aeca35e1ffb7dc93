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

#ifndef VGPN__WORLD__TARGET_HPP_
#define VGPN__WORLD__TARGET_HPP_

#include "vgpn/world/scene.hpp"

#include <Eigen/Core>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vgpn::world
{

/// Spoken description of a target: noun category plus property adjectives.
struct ObjectDescription
{
  std::string category;
  std::set<std::string> properties;

  friend bool operator==(const ObjectDescription &, const ObjectDescription &) = default;
};

enum class GoalSource {
  ObjectMatch,   // position derived from a described object
  Intersection,  // the pointing ray's ground intersection
  Relative,      // endpoint of a move/turn relative to the robot
};

std::string_view to_string(GoalSource source);

struct NavigationGoal
{
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  GoalSource source = GoalSource::Intersection;
  std::optional<std::string> matched_object_id;  // set iff source == ObjectMatch
};

/// Objects of `category` whose properties include all of `properties`,
/// ordered by id.
std::vector<const SceneObject *> match_objects(
  const Scene & scene, std::string_view category, const std::set<std::string> & properties);

bool is_unique(const Scene & scene, std::string_view category, const std::set<std::string> & properties);

/// Goal in front of an object: center moved by footprint + robot radius
/// toward the robot's start position.
Eigen::Vector2d standoff_point(const SceneObject & object, const Scene & scene);

/// Target decision.
///
/// - No description: the goal is the intersection point.
/// - Description with one match: that object, whatever the intersection.
/// - Description with several matches: the candidate nearest (2D) to the
///   intersection point; equal distances go to the smaller id.
///
/// Object goals are placed at standoff_point. Throws Error(NoSuchObject) for
/// an empty candidate set and Error(MissingIntersection) when the decision
/// needs an intersection point that is absent.
NavigationGoal resolve_target(
  const std::optional<ObjectDescription> & description,
  const std::optional<Eigen::Vector2d> & intersection, const Scene & scene);

}  // namespace vgpn::world

#endif  // VGPN__WORLD__TARGET_HPP_
