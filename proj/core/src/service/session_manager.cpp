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

#include "vgpn/service/session_manager.hpp"

#include "vgpn/error.hpp"
#include "vgpn/geometry/synthesis.hpp"

#include <condition_variable>
#include <limits>

namespace vgpn::service
{

geometry::KeypointFrame frame_for_aim(const world::Scene & scene, const Eigen::Vector2d & aim)
{
  return geometry::synthesize_frame(
    scene.user.position, scene.user.height, aim, geometry::Arm::Right, scene.camera.inverse(),
    scene.ground_height);
}

io::Json to_json(const SessionEvent & event)
{
  return {{"seq", event.seq}, {"kind", event.kind}, {"time", event.time}, {"data", event.data}};
}

io::Json to_json(const SessionState & state)
{
  io::Json path = io::Json::array();
  for (const auto & p : state.active_path) {
    path.push_back(io::vector_json(p));
  }
  return {
    {"schema_version", io::kSchemaVersion},
    {"id", state.id},
    {"mode", std::string(pipeline::to_string(state.mode))},
    {"time", state.time},
    {"robot",
     {{"position", io::vector_json(state.robot.position)},
      {"heading", state.robot.heading},
      {"radius", state.robot.radius}}},
    {"motion_id", state.motion_id ? io::Json(*state.motion_id) : io::Json(nullptr)},
    {"active_path", path},
    {"last_outcome", state.last_outcome ? io::to_json(*state.last_outcome) : io::Json(nullptr)},
    {"event_count", state.event_count}};
}

struct SessionManager::Session
{
  Session(std::string id_, std::shared_ptr<const pipeline::World> world_, pipeline::Mode mode_, double dt_)
  : id(std::move(id_)), world(world_), pipeline(world_), mode(mode_), dt(dt_)
  {
  }

  struct Motion
  {
    std::uint64_t id = 0;
    nav::Trajectory trajectory;
    std::size_t cursor = 0;
    std::size_t next_event = 0;
  };

  double now() const { return static_cast<double>(steps) * dt; }

  void emit(std::string kind, io::Json data)
  {
    log.push_back({log.size() + 1, std::move(kind), now(), std::move(data)});
    cv.notify_all();
  }

  void emit_motion_events(double up_to)
  {
    auto & m = *motion;
    const auto & events = m.trajectory.events;
    while (m.next_event < events.size() && events[m.next_event].time <= up_to + 1e-9) {
      const auto & e = events[m.next_event++];
      io::Json data = {{"motion_id", m.id}, {"position", io::vector_json(e.position)}};
      if (e.kind == nav::MotionEventKind::WaypointReached) {
        data["waypoint_index"] = e.waypoint_index;
      }
      emit(std::string(nav::to_string(e.kind)), std::move(data));
    }
  }

  void tick()
  {
    ++steps;
    if (!motion) {
      return;
    }
    auto & m = *motion;
    const auto & samples = m.trajectory.samples;
    m.cursor = std::min(m.cursor + 1, samples.size() - 1);
    pipeline.robot().position = samples[m.cursor].position;
    pipeline.robot().heading = samples[m.cursor].heading;
    emit_motion_events(samples[m.cursor].time);
    if (m.cursor + 1 == samples.size()) {
      emit_motion_events(std::numeric_limits<double>::infinity());
      motion.reset();
    }
  }

  std::string id;
  std::shared_ptr<const pipeline::World> world;
  pipeline::Session pipeline;
  pipeline::Mode mode;
  double dt;

  mutable std::mutex mutex;
  mutable std::condition_variable cv;
  std::vector<SessionEvent> log;
  std::uint64_t steps = 0;
  std::optional<pipeline::PipelineOutcome> last_outcome;
  std::optional<Motion> motion;
  std::uint64_t next_motion = 1;
  bool closed = false;
};

SessionManager::SessionManager(ServiceConfig config)
: config_(config)
{
  if (!(config_.dt > 0.0)) {
    throw Error(ErrorCode::SpecInvalid, "dt must be positive");
  }
  if (config_.clock == ClockMode::Realtime) {
    ticker_ = std::jthread([this](std::stop_token stop) {
      const auto period = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(config_.dt));
      auto next = std::chrono::steady_clock::now() + period;
      std::mutex m;
      std::condition_variable_any cv;
      while (!stop.stop_requested()) {
        {
          std::unique_lock lock(m);
          cv.wait_until(lock, stop, next, [] { return false; });
        }
        if (stop.stop_requested()) {
          break;
        }
        tick_all();
        next += period;
      }
    });
  }
}

SessionManager::~SessionManager()
{
  if (ticker_.joinable()) {
    ticker_.request_stop();
    ticker_.join();
  }
}

std::string SessionManager::create_session(world::Scene scene, pipeline::Mode mode)
{
  auto world = std::make_shared<const pipeline::World>(std::move(scene));
  std::lock_guard lock(mutex_);
  const std::string id = "s" + std::to_string(next_id_++);
  sessions_.emplace(id, std::make_shared<Session>(id, std::move(world), mode, config_.dt));
  return id;
}

std::string SessionManager::create_session(const io::Json & doc)
{
  if (doc.is_object() && doc.contains("scene")) {
    pipeline::Mode mode = pipeline::Mode::Vgpn;
    if (doc.contains("mode")) {
      if (!doc.at("mode").is_string()) {
        throw Error(ErrorCode::SceneInvalid, "mode: expected a string");
      }
      try {
        mode = pipeline::mode_from_string(doc.at("mode").get<std::string>());
      } catch (const Error & e) {
        throw Error(ErrorCode::SceneInvalid, std::string("mode: ") + e.message());
      }
    }
    world::Scene scene;
    try {
      scene = io::scene_from_json(doc.at("scene"));
    } catch (const Error & e) {
      throw Error(e.code(), std::string("scene.") + e.message());
    }
    return create_session(std::move(scene), mode);
  }
  return create_session(io::scene_from_json(doc));
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string & id) const
{
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::UnknownSession, "no session '" + id + "'");
  }
  return it->second;
}

SubmitResult SessionManager::submit(
  const std::string & id, const std::string & text, const Gesture & gesture, std::optional<pipeline::Mode> mode)
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  const auto & scene = s->world->scene();
  std::optional<geometry::KeypointFrame> frame = gesture.frame;
  if (!frame && gesture.aim) {
    frame = frame_for_aim(scene, *gesture.aim);
  }

  SubmitResult result;
  result.outcome = pipeline::handle_command(s->pipeline, text, frame, mode.value_or(s->mode));
  const auto & outcome = result.outcome;
  s->last_outcome = outcome;
  s->emit("outcome", io::to_json(outcome));
  for (const auto & e : outcome.events) {
    s->emit("utterance", {{"text", e.text}, {"cause", std::string(pipeline::to_string(e.cause))}});
  }
  if (!outcome.goal) {
    return result;
  }

  if (s->motion) {
    s->emit("motion_preempted", {{"motion_id", s->motion->id}});
    s->motion.reset();
  }
  s->emit("goal_set", io::to_json(*outcome.goal));
  const lang::Instruction instruction = outcome.instruction.value_or(lang::Instruction{"goto", {}});
  nav::ExecutionParams params;
  params.dt = s->dt;
  params.goal_tolerance = scene.goal_tolerance;
  params.forward_step = scene.forward_step;
  const std::uint64_t motion_id = s->next_motion++;
  try {
    auto trajectory = nav::execute(instruction, outcome.goal, s->pipeline.robot(), scene.grid, params);
    s->motion = Session::Motion{motion_id, std::move(trajectory), 0, 0};
    result.motion_id = motion_id;
  } catch (const Error & e) {
    s->emit(
      "motion_failed",
      {{"motion_id", motion_id}, {"code", std::string(to_string(e.code()))}, {"message", e.message()}});
  }
  return result;
}

SessionState SessionManager::state(const std::string & id) const
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  SessionState out;
  out.id = s->id;
  out.mode = s->mode;
  out.time = s->now();
  out.robot = s->pipeline.robot();
  if (s->motion) {
    out.motion_id = s->motion->id;
    out.active_path = s->motion->trajectory.path;
  }
  out.last_outcome = s->last_outcome;
  out.event_count = s->log.size();
  return out;
}

std::vector<SessionEvent> SessionManager::events(const std::string & id, std::uint64_t since) const
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (since >= s->log.size()) {
    return {};
  }
  return {s->log.begin() + static_cast<std::ptrdiff_t>(since), s->log.end()};
}

std::vector<SessionEvent> SessionManager::wait_for_events(
  const std::string & id, std::uint64_t since, std::chrono::milliseconds timeout) const
{
  auto s = find(id);
  std::unique_lock lock(s->mutex);
  s->cv.wait_for(lock, timeout, [&] { return s->closed || s->log.size() > since; });
  if (since >= s->log.size()) {
    return {};
  }
  return {s->log.begin() + static_cast<std::ptrdiff_t>(since), s->log.end()};
}

void SessionManager::step(const std::string & id, std::size_t ticks)
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  for (std::size_t i = 0; i < ticks; ++i) {
    s->tick();
  }
}

bool SessionManager::run_until_idle(const std::string & id, std::size_t max_ticks)
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  for (std::size_t i = 0; i < max_ticks && s->motion; ++i) {
    s->tick();
  }
  return !s->motion;
}

bool SessionManager::remove(const std::string & id)
{
  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) {
      return false;
    }
    s = it->second;
    sessions_.erase(it);
  }
  std::lock_guard lock(s->mutex);
  s->closed = true;
  s->cv.notify_all();
  return true;
}

std::vector<std::string> SessionManager::session_ids() const
{
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  for (const auto & [id, _] : sessions_) {
    out.push_back(id);
  }
  return out;
}

void SessionManager::tick_all()
{
  std::vector<std::shared_ptr<Session>> all;
  {
    std::lock_guard lock(mutex_);
    for (const auto & [_, s] : sessions_) {
      all.push_back(s);
    }
  }
  for (const auto & s : all) {
    std::lock_guard lock(s->mutex);
    s->tick();
  }
}

}  // namespace vgpn::service
