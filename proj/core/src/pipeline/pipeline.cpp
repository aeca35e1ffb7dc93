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

#include "vgpn/pipeline/pipeline.hpp"

#include "vgpn/error.hpp"
#include "vgpn/nav/execute.hpp"

#include <algorithm>
#include <chrono>

namespace vgpn::pipeline
{

struct SessionAccess
{
  static void count_phase2(Session & session) { ++session.phase2_invocations_; }
};

std::string_view to_string(Mode mode)
{
  return mode == Mode::Vgpn ? "vgpn" : "pointing-only";
}

Mode mode_from_string(std::string_view text)
{
  if (text == "vgpn") {
    return Mode::Vgpn;
  }
  if (text == "pointing-only") {
    return Mode::PointingOnly;
  }
  throw Error(ErrorCode::SpecInvalid, "unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(UtteranceCause cause)
{
  switch (cause) {
    case UtteranceCause::NoPerson: return "no-person";
    case UtteranceCause::NoGesture: return "no-gesture";
    case UtteranceCause::NotUnderstood: return "not-understood";
    case UtteranceCause::NoTarget: return "no-target";
  }
  return "?";
}

UtteranceEvent UtteranceEvent::make(UtteranceCause cause, std::string detail)
{
  std::string_view text;
  switch (cause) {
    case UtteranceCause::NoPerson: text = kNoPersonText; break;
    case UtteranceCause::NoGesture: text = kNoGestureText; break;
    case UtteranceCause::NotUnderstood: text = kNotUnderstoodText; break;
    case UtteranceCause::NoTarget: text = kNoTargetText; break;
  }
  return {std::string(text), cause, std::move(detail)};
}

World::World(world::Scene scene, std::shared_ptr<const lang::Language> language, PipelineConfig config)
: scene_(std::move(scene)), language_(std::move(language)), config_(config)
{
  if (!language_) {
    // Non-owning handle to the static instance.
    language_ = std::shared_ptr<const lang::Language>(&lang::Language::builtin(), [](const lang::Language *) {});
  }
  scene_.validate();
  scene_.validate_categories(language_->lexicon());
}

Session::Session(std::shared_ptr<const World> world)
: world_(std::move(world))
{
  if (!world_) {
    throw Error(ErrorCode::SceneInvalid, "session without a world");
  }
  robot_ = world_->scene().robot_start;
}

namespace
{

using Clock = std::chrono::steady_clock;

double micros(Clock::time_point a, Clock::time_point b)
{
  return std::chrono::duration<double, std::micro>(b - a).count();
}

// Select arm, detect, build the ray. Returns the failure, if any.
std::optional<UtteranceEvent> estimate_pointing(
  const std::optional<geometry::KeypointFrame> & frame, const World & world, PipelineOutcome & out)
{
  if (!frame || frame->empty()) {
    return UtteranceEvent::make(UtteranceCause::NoPerson, "no person in view");
  }
  try {
    frame->validate();
  } catch (const vgpn::Error & e) {
    return UtteranceEvent::make(UtteranceCause::NoPerson, e.what());
  }
  const auto & camera = world.scene().camera;
  const Eigen::Vector3d vertical = geometry::vertical_in_camera(camera);
  try {
    const geometry::Arm arm = geometry::select_arm(*frame, vertical);
    out.arm = arm;
    if (!geometry::detect_pointing(*frame, vertical, world.config().pointing_threshold_deg)) {
      return UtteranceEvent::make(UtteranceCause::NoGesture, "arm not raised");
    }
    out.ray = geometry::pointing_ray(*frame, arm, camera);
  } catch (const vgpn::Error & e) {
    return UtteranceEvent::make(UtteranceCause::NoGesture, e.what());
  }
  return std::nullopt;
}

}  // namespace

PipelineOutcome handle_command(
  Session & session, std::string_view text, const std::optional<geometry::KeypointFrame> & frame,
  Mode mode, const HandleOptions & options)
{
  const auto start = Clock::now();
  const World & world = session.world();
  const world::Scene & scene = world.scene();

  PipelineOutcome out;
  out.mode = mode;
  out.command = std::string(text);
  double t1 = 0.0;
  double t2 = 0.0;

  auto finish = [&]() -> PipelineOutcome {
    const auto end = Clock::now();
    out.timing.t1 = t1;
    out.timing.t2 = t2;
    out.timing.total = micros(start, end);
    out.timing.t3 = std::max(0.0, out.timing.total - t1 - t2);
    return std::move(out);
  };
  auto fail = [&](UtteranceCause cause, std::string detail) -> PipelineOutcome {
    out.goal.reset();
    out.events.push_back(UtteranceEvent::make(cause, std::move(detail)));
    return finish();
  };
  auto phase2 = [&]() -> std::optional<UtteranceEvent> {
    const auto p2 = Clock::now();
    SessionAccess::count_phase2(session);
    out.timing.phase2_invoked = true;
    auto failure = estimate_pointing(frame, world, out);
    t2 = micros(p2, Clock::now());
    if (!failure) {
      try {
        out.intersection = geometry::ground_intersection(*out.ray, scene.ground_height);
      } catch (const Error & e) {
        failure = UtteranceEvent::make(UtteranceCause::NoTarget, e.what());
      }
    }
    return failure;
  };

  if (mode == Mode::PointingOnly) {
    if (auto failure = phase2()) {
      out.events.push_back(std::move(*failure));
      return finish();
    }
    out.goal = world::NavigationGoal{out.intersection->head<2>(), world::GoalSource::Intersection, std::nullopt};
    return finish();
  }

  const auto p1 = Clock::now();
  lang::Instruction instruction;
  try {
    instruction = world.language().understand(text).instruction;
  } catch (const Error & e) {
    t1 = micros(p1, Clock::now());
    return fail(UtteranceCause::NotUnderstood, e.what());
  }
  t1 = micros(p1, Clock::now());
  out.instruction = instruction;

  const auto & lexicon = world.language().lexicon();
  const lang::GestureDecision decision = lang::requires_gesture(instruction, scene, lexicon);
  out.gesture = decision;

  if (!lang::is_spatial_verb(instruction.verb)) {
    if (options.force_gesture) {
      phase2();
    }
    try {
      const nav::RobotState end = nav::predicted_pose(instruction, session.robot(), scene.forward_step);
      out.goal = world::NavigationGoal{end.position, world::GoalSource::Relative, std::nullopt};
    } catch (const Error & e) {
      return fail(UtteranceCause::NotUnderstood, e.what());
    }
    return finish();
  }

  const auto description = lang::object_description(instruction, lexicon);
  if (description) {
    for (const auto * o : world::match_objects(scene, description->category, description->properties)) {
      out.candidates.push_back(o->id);
    }
  }

  std::optional<Eigen::Vector2d> point;
  if (decision.required || options.force_gesture) {
    auto failure = phase2();
    if (decision.required) {
      if (failure) {
        out.events.push_back(std::move(*failure));
        return finish();
      }
      point = out.intersection->head<2>();
    }
  }

  try {
    out.goal = world::resolve_target(description, point, scene);
  } catch (const Error & e) {
    return fail(UtteranceCause::NoTarget, e.what());
  }
  return finish();
}

}  // namespace vgpn::pipeline
