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

#ifndef VGPN__WORLD__SCENE_HPP_
#define VGPN__WORLD__SCENE_HPP_

#include "vgpn/geometry/transform.hpp"
#include "vgpn/nav/grid.hpp"
#include "vgpn/nav/robot.hpp"

#include <Eigen/Core>

#include <set>
#include <string>
#include <vector>

namespace vgpn::lang
{
class Lexicon;
}

namespace vgpn::world
{

/// An annotated object of the known map.
struct SceneObject
{
  std::string id;
  std::string category;          // noun lemma
  std::set<std::string> properties;  // lowercase tags, e.g. "black"
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  double footprint_radius = 0.0;
};

struct UserPose
{
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  double height = 1.75;
};

/// Known world: map, annotated objects, camera pose and people.
struct Scene
{
  std::vector<SceneObject> objects;
  nav::OccupancyGrid grid;
  double ground_height = 0.0;
  geometry::RigidTransform camera;  // camera frame -> map frame
  UserPose user;
  nav::RobotState robot_start;
  double forward_step = 1.0;     // meters per bare `move(forward)`
  double goal_tolerance = 0.10;  // meters

  const SceneObject * find_object(const std::string & id) const;

  /// Checks the scene invariants: unique object ids, non-negative
  /// footprints, objects inside the grid, robot start free, positive robot
  /// radius/speed/turn rate. Throws Error(SceneInvalid).
  void validate() const;

  /// Additionally requires every object category to be a lexicon noun.
  void validate_categories(const lang::Lexicon & lexicon) const;
};

}  // namespace vgpn::world

#endif  // VGPN__WORLD__SCENE_HPP_
