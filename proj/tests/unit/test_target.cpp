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

#include "test_support.hpp"

#include "vgpn/error.hpp"
#include "vgpn/world/target.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

namespace vgpn::world
{
namespace
{

SceneObject object(const std::string & id, const std::string & category, std::set<std::string> props, double x, double y)
{
  SceneObject o;
  o.id = id;
  o.category = category;
  o.properties = std::move(props);
  o.position = {x, y};
  o.footprint_radius = 0.2;
  return o;
}

Scene chairs()
{
  Scene s = test::open_scene(8, 6);
  s.objects = {
    object("chair_1", "chair", {"black"}, 3, 1.5),
    object("chair_2", "chair", {"red"}, 3, 4.5),
    object("chair_3", "chair", {"black"}, 6, 3),
    object("door_1", "door", {}, 7.5, 3),
  };
  return s;
}

TEST(Target, PointGoalWithoutDescription)
{
  const auto g = resolve_target(std::nullopt, Eigen::Vector2d(3, 1), chairs());
  EXPECT_EQ(g.source, GoalSource::Intersection);
  EXPECT_EQ(g.position, Eigen::Vector2d(3, 1));
  EXPECT_FALSE(g.matched_object_id);
}

TEST(Target, UniqueMatchIgnoresIntersection)
{
  const Scene s = chairs();
  for (const auto & hit : {std::optional<Eigen::Vector2d>{}, std::optional<Eigen::Vector2d>{Eigen::Vector2d(6, 3)}}) {
    const auto g = resolve_target(ObjectDescription{"chair", {"red"}}, hit, s);
    EXPECT_EQ(g.matched_object_id, "chair_2");
    EXPECT_EQ(g.source, GoalSource::ObjectMatch);
  }
}

TEST(Target, NearestCandidate)
{
  const Scene s = chairs();
  EXPECT_EQ(resolve_target(ObjectDescription{"chair", {"black"}}, Eigen::Vector2d(5, 3), s).matched_object_id, "chair_3");
  EXPECT_EQ(resolve_target(ObjectDescription{"chair", {"black"}}, Eigen::Vector2d(3, 3), s).matched_object_id, "chair_1");
  EXPECT_EQ(resolve_target(ObjectDescription{"chair", {}}, Eigen::Vector2d(3, 4), s).matched_object_id, "chair_2");
}

TEST(Target, TieGoesToSmallerId)
{
  Scene s = chairs();
  // (3, 3) is 1.5 m from chair_1 and chair_2.
  EXPECT_EQ(resolve_target(ObjectDescription{"chair", {}}, Eigen::Vector2d(3, 3), s).matched_object_id, "chair_1");
  std::swap(s.objects[0].id, s.objects[1].id);
  EXPECT_EQ(resolve_target(ObjectDescription{"chair", {}}, Eigen::Vector2d(3, 3), s).matched_object_id, "chair_1");
}

TEST(Target, Errors)
{
  const Scene s = chairs();
  try {
    resolve_target(ObjectDescription{"sofa", {}}, Eigen::Vector2d(1, 1), s);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSuchObject);
  }
  try {
    resolve_target(ObjectDescription{"chair", {"blue"}}, Eigen::Vector2d(1, 1), s);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSuchObject);
  }
  try {
    resolve_target(ObjectDescription{"chair", {"black"}}, std::nullopt, s);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingIntersection);
  }
  try {
    resolve_target(std::nullopt, std::nullopt, s);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingIntersection);
  }
}

TEST(Target, StandoffFacesRobot)
{
  const Scene s = chairs();
  const auto g = resolve_target(ObjectDescription{"door", {}}, std::nullopt, s);
  const Eigen::Vector2d door(7.5, 3);
  EXPECT_NEAR((g.position - door).norm(), 0.2 + s.robot_start.radius, 1e-12);
  EXPECT_LT((g.position - s.robot_start.position).norm(), (door - s.robot_start.position).norm());
}

TEST(Target, MatchesOracleOnRandomScenes)
{
  const std::vector<std::string> categories{"chair", "table", "door"};
  const std::vector<std::string> colors{"black", "red", "white"};
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pos(0.5, 7.5);
  std::uniform_int_distribution<int> count(0, 8), pick(0, 2), coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    Scene s = test::open_scene(8, 8);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      std::set<std::string> props;
      if (coin(rng)) {
        props.insert(colors[static_cast<std::size_t>(pick(rng))]);
      }
      s.objects.push_back(object(
        "o" + std::to_string(n - i), categories[static_cast<std::size_t>(pick(rng))], props, pos(rng), pos(rng)));
    }
    std::optional<ObjectDescription> description;
    if (pick(rng) > 0) {
      description = ObjectDescription{categories[static_cast<std::size_t>(pick(rng))], {}};
      if (coin(rng)) {
        description->properties.insert(colors[static_cast<std::size_t>(pick(rng))]);
      }
    }
    std::optional<Eigen::Vector2d> hit;
    if (pick(rng) > 0) {
      hit = Eigen::Vector2d(pos(rng), pos(rng));
    }
    const auto want = test::oracle_target(s, description, hit);
    try {
      const auto got = resolve_target(description, hit, s);
      if (want.kind == test::OracleTarget::Kind::Point) {
        EXPECT_EQ(got.position, want.point);
        EXPECT_FALSE(got.matched_object_id);
      } else {
        ASSERT_EQ(want.kind, test::OracleTarget::Kind::Object) << trial;
        EXPECT_EQ(got.matched_object_id, want.object_id) << trial;
      }
    } catch (const Error & e) {
      if (want.kind == test::OracleTarget::Kind::NoSuchObject) {
        EXPECT_EQ(e.code(), ErrorCode::NoSuchObject);
      } else {
        EXPECT_EQ(want.kind, test::OracleTarget::Kind::MissingIntersection) << trial << " " << e.what();
        EXPECT_EQ(e.code(), ErrorCode::MissingIntersection);
      }
    }
  }
}

}  // namespace
}  // namespace vgpn::world
