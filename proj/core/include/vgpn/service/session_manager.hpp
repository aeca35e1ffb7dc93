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

#ifndef VGPN__SERVICE__SESSION_MANAGER_HPP_
#define VGPN__SERVICE__SESSION_MANAGER_HPP_

#include "vgpn/geometry/keypoints.hpp"
#include "vgpn/io/json_io.hpp"
#include "vgpn/nav/execute.hpp"
#include "vgpn/pipeline/pipeline.hpp"
#include "vgpn/world/scene.hpp"

#include <Eigen/Core>

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace vgpn::service
{

enum class ClockMode {
  Realtime,  // a background thread advances every session once per dt of wall time
  Manual,    // sessions advance only through step()
};

struct ServiceConfig
{
  ClockMode clock = ClockMode::Realtime;
  double dt = 0.1;  // simulated seconds per tick
};

/// Pointing input for a command: a ground aim point (turned into a
/// skeleton of the scene's user) or a raw keypoint frame. The frame wins
/// when both are given.
struct Gesture
{
  std::optional<Eigen::Vector2d> aim;
  std::optional<geometry::KeypointFrame> frame;
};

/// Right-arm skeleton of the scene's user aiming at `aim`.
geometry::KeypointFrame frame_for_aim(const world::Scene & scene, const Eigen::Vector2d & aim);

/// One entry of a session's append-only log. `seq` starts at 1.
struct SessionEvent
{
  std::uint64_t seq = 0;
  std::string kind;  // outcome, utterance, goal_set, waypoint_reached, arrival, collision, motion_preempted, motion_failed
  double time = 0.0;  // simulated seconds since session start
  io::Json data;
};

io::Json to_json(const SessionEvent & event);

struct SubmitResult
{
  pipeline::PipelineOutcome outcome;
  std::optional<std::uint64_t> motion_id;
};

struct SessionState
{
  std::string id;
  pipeline::Mode mode = pipeline::Mode::Vgpn;
  double time = 0.0;
  nav::RobotState robot;
  std::optional<std::uint64_t> motion_id;  // active motion, if any
  std::vector<Eigen::Vector2d> active_path;
  std::optional<pipeline::PipelineOutcome> last_outcome;
  std::uint64_t event_count = 0;
};

io::Json to_json(const SessionState & state);

/// Owns sessions and their simulated robots. All methods are thread-safe;
/// calls on one session are serialized, different sessions run in parallel.
/// Unknown ids throw Error(UnknownSession).
class SessionManager
{
public:
  explicit SessionManager(ServiceConfig config = {});
  ~SessionManager();
  SessionManager(const SessionManager &) = delete;
  SessionManager & operator=(const SessionManager &) = delete;

  std::string create_session(world::Scene scene, pipeline::Mode mode = pipeline::Mode::Vgpn);

  /// Accepts a scene document, or `{"scene": {...}, "mode": "..."}`.
  /// Throws Error(SceneInvalid).
  std::string create_session(const io::Json & doc);

  /// Runs the pipeline on the session's current robot pose. A goal starts a
  /// motion that preempts any running one.
  SubmitResult submit(
    const std::string & id, const std::string & text, const Gesture & gesture,
    std::optional<pipeline::Mode> mode = std::nullopt);

  SessionState state(const std::string & id) const;

  /// Events with seq > since, in order.
  std::vector<SessionEvent> events(const std::string & id, std::uint64_t since = 0) const;

  /// Like events() but blocks up to `timeout` while none are newer than
  /// `since`.
  std::vector<SessionEvent> wait_for_events(
    const std::string & id, std::uint64_t since, std::chrono::milliseconds timeout) const;

  /// Advances one session by `ticks` simulation steps.
  void step(const std::string & id, std::size_t ticks = 1);

  /// Steps until no motion is active or `max_ticks` elapse. Returns whether
  /// the session is idle.
  bool run_until_idle(const std::string & id, std::size_t max_ticks = 100000);

  bool remove(const std::string & id);
  std::vector<std::string> session_ids() const;
  const ServiceConfig & config() const { return config_; }

private:
  struct Session;
  std::shared_ptr<Session> find(const std::string & id) const;
  void tick_all();

  ServiceConfig config_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
  std::jthread ticker_;
};

}  // namespace vgpn::service

#endif  // VGPN__SERVICE__SESSION_MANAGER_HPP_
