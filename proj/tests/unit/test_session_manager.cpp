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
#include "vgpn/io/json_io.hpp"
#include "vgpn/service/session_manager.hpp"

#include <gtest/gtest.h>

#include <thread>

namespace vgpn::service
{
namespace
{

ServiceConfig manual()
{
  return ServiceConfig{ClockMode::Manual, 0.1};
}

std::vector<std::string> kinds(const std::vector<SessionEvent> & events)
{
  std::vector<std::string> out;
  for (const auto & e : events) {
    out.push_back(e.kind);
  }
  return out;
}

TEST(SessionManager, CreateAndRemove)
{
  SessionManager m(manual());
  const auto a = m.create_session(test::shipped_scene("unique_door"));
  const auto b = m.create_session(io::Json{{"scene", io::scene_to_json(test::shipped_scene("diff"))}, {"mode", "pointing-only"}});
  EXPECT_EQ(a, "s1");
  EXPECT_EQ(b, "s2");
  EXPECT_EQ(m.state(b).mode, pipeline::Mode::PointingOnly);
  EXPECT_EQ(m.session_ids(), (std::vector<std::string>{"s1", "s2"}));
  EXPECT_TRUE(m.remove(a));
  EXPECT_FALSE(m.remove(a));
  try {
    m.state(a);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSession);
  }
  try {
    m.create_session(io::Json{{"scene", io::Json::object()}});
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::SceneInvalid);
    EXPECT_EQ(e.message().rfind("scene.", 0), 0u) << e.message();
  }
}

TEST(SessionManager, GoalRunsToArrival)
{
  SessionManager m(manual());
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  const auto r = m.submit(id, "go to that door", {});
  ASSERT_TRUE(r.outcome.ok());
  ASSERT_TRUE(r.motion_id);
  EXPECT_EQ(m.state(id).motion_id, r.motion_id);
  EXPECT_FALSE(m.state(id).active_path.empty());
  EXPECT_EQ(kinds(m.events(id)), (std::vector<std::string>{"outcome", "goal_set"}));
  EXPECT_TRUE(m.run_until_idle(id));
  const auto events = m.events(id);
  EXPECT_EQ(events.back().kind, "arrival");
  for (std::size_t i = 0; i < events.size(); ++i) {
    EXPECT_EQ(events[i].seq, i + 1);
    if (i > 0) {
      EXPECT_GE(events[i].time, events[i - 1].time);
    }
  }
  const auto s = m.state(id);
  EXPECT_FALSE(s.motion_id);
  EXPECT_LE((s.robot.position - r.outcome.goal->position).norm(), 0.1);
  EXPECT_GT(s.time, 0.0);
}

TEST(SessionManager, FailureEmitsUtterance)
{
  SessionManager m(manual());
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  const auto r = m.submit(id, "go there", {});
  EXPECT_FALSE(r.motion_id);
  const auto events = m.events(id);
  ASSERT_EQ(kinds(events), (std::vector<std::string>{"outcome", "utterance"}));
  EXPECT_EQ(events[1].data.at("cause"), "no-person");
  EXPECT_EQ(events[1].data.at("text"), "Sorry, I can't see you!");
}

TEST(SessionManager, NewGoalPreempts)
{
  SessionManager m(manual());
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  const auto first = m.submit(id, "go to that door", {});
  m.step(id, 5);
  const Eigen::Vector2d mid = m.state(id).robot.position;
  EXPECT_GT((mid - Eigen::Vector2d(1.0, 3.0)).norm(), 0.1);
  // A failed command keeps the running motion.
  m.submit(id, "banana", {});
  EXPECT_EQ(m.state(id).motion_id, first.motion_id);
  const auto second = m.submit(id, "go there", Gesture{Eigen::Vector2d(3.0, 1.0), std::nullopt});
  ASSERT_TRUE(second.motion_id);
  EXPECT_NE(*second.motion_id, *first.motion_id);
  const auto events = m.events(id);
  bool preempted = false;
  for (const auto & e : events) {
    if (e.kind == "motion_preempted") {
      preempted = true;
      EXPECT_EQ(e.data.at("motion_id"), *first.motion_id);
    }
  }
  EXPECT_TRUE(preempted);
  EXPECT_TRUE(m.run_until_idle(id));
  EXPECT_LE((m.state(id).robot.position - Eigen::Vector2d(3.0, 1.0)).norm(), 0.1);
  for (const auto & e : m.events(id)) {
    if (e.kind == "arrival") {
      EXPECT_EQ(e.data.at("motion_id"), *second.motion_id);
    }
  }
}

TEST(SessionManager, RelativeCommandFromCurrentPose)
{
  SessionManager m(manual());
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  m.submit(id, "turn left", {});
  m.run_until_idle(id);
  m.submit(id, "move forward 1 meter", {});
  m.run_until_idle(id);
  EXPECT_LT((m.state(id).robot.position - Eigen::Vector2d(1.0, 4.0)).norm(), 1e-6);
}

TEST(SessionManager, EventCursor)
{
  SessionManager m(manual());
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  m.submit(id, "go to that door", {});
  m.run_until_idle(id);
  const auto all = m.events(id);
  ASSERT_GT(all.size(), 3u);
  const auto tail = m.events(id, 2);
  ASSERT_EQ(tail.size(), all.size() - 2);
  EXPECT_EQ(tail.front().seq, 3u);
  EXPECT_TRUE(m.events(id, all.size()).empty());
  EXPECT_TRUE(m.events(id, all.size() + 10).empty());
  EXPECT_EQ(m.state(id).event_count, all.size());
}

TEST(SessionManager, WaitForEventsWakesOnSubmit)
{
  SessionManager m(manual());
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  std::jthread producer([&] {
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
    m.submit(id, "stop", {});
  });
  const auto events = m.wait_for_events(id, 0, std::chrono::milliseconds(5000));
  ASSERT_FALSE(events.empty());
  EXPECT_EQ(events.front().kind, "outcome");
  EXPECT_TRUE(m.wait_for_events(id, 100, std::chrono::milliseconds(10)).empty());
}

TEST(SessionManager, RealtimeClockAdvances)
{
  SessionManager m(ServiceConfig{ClockMode::Realtime, 0.01});
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  m.submit(id, "turn left", {});
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(20);
  while (m.state(id).motion_id && std::chrono::steady_clock::now() < deadline) {
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  EXPECT_FALSE(m.state(id).motion_id);
  EXPECT_GT(m.state(id).time, 0.0);
}

TEST(SessionManager, AimTooCloseIsRejected)
{
  SessionManager m(manual());
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  const Eigen::Vector2d user = test::shipped_scene("unique_door").user.position;
  try {
    m.submit(id, "go there", Gesture{user, std::nullopt});
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::AimTooClose);
  }
}

TEST(SessionManager, StateJson)
{
  SessionManager m(manual());
  const auto id = m.create_session(test::shipped_scene("unique_door"));
  m.submit(id, "go to that door", {});
  const auto doc = to_json(m.state(id));
  EXPECT_EQ(doc.at("schema_version"), 1);
  EXPECT_EQ(doc.at("id"), id);
  EXPECT_TRUE(doc.contains("robot"));
  EXPECT_FALSE(doc.at("active_path").empty());
}

}  // namespace
}  // namespace vgpn::service
