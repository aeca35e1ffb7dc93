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

#include "vgpn/world/scene.hpp"

#include "vgpn/error.hpp"
#include "vgpn/lang/lexicon.hpp"

namespace vgpn::world
{

const SceneObject * Scene::find_object(const std::string & id) const
{
  for (const auto & o : objects) {
    if (o.id == id) {
      return &o;
    }
  }
  return nullptr;
}

void Scene::validate() const
{
  auto fail = [](const std::string & what) { throw Error(ErrorCode::SceneInvalid, what); };
  std::set<std::string> ids;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto & o = objects[i];
    const std::string where = "objects[" + std::to_string(i) + "]";
    if (o.id.empty()) {
      fail(where + ".id: must be nonempty");
    }
    if (!ids.insert(o.id).second) {
      fail(where + ".id: duplicate id '" + o.id + "'");
    }
    if (o.category.empty()) {
      fail(where + ".category: must be nonempty");
    }
    if (!(o.footprint_radius >= 0.0)) {
      fail(where + ".footprint_radius: must be >= 0");
    }
    if (!o.position.allFinite() || !grid.contains(o.position)) {
      fail(where + ".position: outside the grid");
    }
  }
  if (!(robot_start.radius > 0.0) || !(robot_start.speed > 0.0) || !(robot_start.turn_rate > 0.0)) {
    fail("robot_start: radius, speed and turn_rate must be > 0");
  }
  if (!grid.is_free(robot_start.position)) {
    fail("robot_start.position: not in free space");
  }
  if (!(user.height > 0.0)) {
    fail("user.height: must be > 0");
  }
  if (!(forward_step > 0.0) || !(goal_tolerance > 0.0)) {
    fail("forward_step and goal_tolerance must be > 0");
  }
}

void Scene::validate_categories(const lang::Lexicon & lexicon) const
{
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!lexicon.is_noun(objects[i].category)) {
      throw Error(
        ErrorCode::SceneInvalid, "objects[" + std::to_string(i) + "].category: '" +
                                   objects[i].category + "' is not a noun of the lexicon");
    }
  }
}

}  // namespace vgpn::world
