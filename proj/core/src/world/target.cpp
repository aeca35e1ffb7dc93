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

#include "vgpn/world/target.hpp"

#include "vgpn/error.hpp"

#include <algorithm>

namespace vgpn::world
{

std::string_view to_string(GoalSource source)
{
  switch (source) {
    case GoalSource::ObjectMatch: return "object-match";
    case GoalSource::Intersection: return "intersection";
    case GoalSource::Relative: return "relative";
  }
  return "?";
}

std::vector<const SceneObject *> match_objects(
  const Scene & scene, std::string_view category, const std::set<std::string> & properties)
{
  std::vector<const SceneObject *> out;
  for (const auto & o : scene.objects) {
    if (o.category != category) {
      continue;
    }
    if (std::includes(o.properties.begin(), o.properties.end(), properties.begin(), properties.end())) {
      out.push_back(&o);
    }
  }
  std::sort(out.begin(), out.end(), [](const SceneObject * a, const SceneObject * b) { return a->id < b->id; });
  return out;
}

bool is_unique(const Scene & scene, std::string_view category, const std::set<std::string> & properties)
{
  return match_objects(scene, category, properties).size() == 1;
}

Eigen::Vector2d standoff_point(const SceneObject & object, const Scene & scene)
{
  Eigen::Vector2d toward = scene.robot_start.position - object.position;
  if (toward.norm() < 1e-9) {
    toward = Eigen::Vector2d::UnitX();
  }
  return object.position + (object.footprint_radius + scene.robot_start.radius) * toward.normalized();
}

NavigationGoal resolve_target(
  const std::optional<ObjectDescription> & description,
  const std::optional<Eigen::Vector2d> & intersection, const Scene & scene)
{
  if (!description) {
    if (!intersection) {
      throw Error(ErrorCode::MissingIntersection, "no object description and no pointing target");
    }
    return NavigationGoal{*intersection, GoalSource::Intersection, std::nullopt};
  }

  const auto candidates = match_objects(scene, description->category, description->properties);
  if (candidates.empty()) {
    throw Error(ErrorCode::NoSuchObject, "no '" + description->category + "' matches the description");
  }
  const SceneObject * chosen = candidates.front();
  if (candidates.size() > 1) {
    if (!intersection) {
      throw Error(
        ErrorCode::MissingIntersection,
        std::to_string(candidates.size()) + " candidates and no pointing target");
    }
    // Candidates are sorted by id, so strict < keeps the smaller id on ties.
    double best = (chosen->position - *intersection).norm();
    for (const SceneObject * c : candidates) {
      const double d = (c->position - *intersection).norm();
      if (d < best) {
        best = d;
        chosen = c;
      }
    }
  }
  return NavigationGoal{standoff_point(*chosen, scene), GoalSource::ObjectMatch, chosen->id};
}

}  // namespace vgpn::world
