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

#ifndef VGPN__PIPELINE__PIPELINE_HPP_
#define VGPN__PIPELINE__PIPELINE_HPP_

#include "vgpn/geometry/keypoints.hpp"
#include "vgpn/geometry/pointing.hpp"
#include "vgpn/geometry/transform.hpp"
#include "vgpn/lang/gesture_rule.hpp"
#include "vgpn/lang/instruction.hpp"
#include "vgpn/lang/language.hpp"
#include "vgpn/nav/robot.hpp"
#include "vgpn/pipeline/timing.hpp"
#include "vgpn/world/scene.hpp"
#include "vgpn/world/target.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgpn::pipeline
{

enum class Mode { Vgpn, PointingOnly };

std::string_view to_string(Mode mode);
/// Accepts "vgpn" and "pointing-only". Throws Error(SpecInvalid).
Mode mode_from_string(std::string_view text);

enum class UtteranceCause { NoPerson, NoGesture, NotUnderstood, NoTarget };

std::string_view to_string(UtteranceCause cause);

inline constexpr std::string_view kNoPersonText = "Sorry, I can't see you!";
inline constexpr std::string_view kNoGestureText = "Sorry, where are you pointing at?";
inline constexpr std::string_view kNotUnderstoodText = "Sorry, I don't understand.";
inline constexpr std::string_view kNoTargetText = "Sorry, I can't find that.";

/// Spoken reply for a failure.
struct UtteranceEvent
{
  std::string text;
  UtteranceCause cause;
  std::string detail;  // the underlying error, for logs

  static UtteranceEvent make(UtteranceCause cause, std::string detail = {});
};

struct PipelineOutcome
{
  Mode mode = Mode::Vgpn;
  std::string command;
  std::optional<lang::Instruction> instruction;  // absent in pointing-only mode or on parse failure
  std::optional<lang::GestureDecision> gesture;
  std::optional<geometry::Arm> arm;
  std::optional<geometry::Ray> ray;
  std::optional<Eigen::Vector3d> intersection;
  std::vector<std::string> candidates;  // ids matching the spoken description
  std::optional<world::NavigationGoal> goal;
  std::vector<UtteranceEvent> events;
  TimingRecord timing;

  bool ok() const { return goal.has_value(); }
};

struct PipelineConfig
{
  double pointing_threshold_deg = geometry::kDefaultPointingThresholdDeg;
};

/// Read-only data shared by every session on one scene.
class World
{
public:
  /// Validates the scene, including its categories against the lexicon.
  /// A null language selects Language::builtin().
  explicit World(
    world::Scene scene, std::shared_ptr<const lang::Language> language = nullptr,
    PipelineConfig config = {});

  const world::Scene & scene() const { return scene_; }
  const lang::Language & language() const { return *language_; }
  const PipelineConfig & config() const { return config_; }

private:
  world::Scene scene_;
  std::shared_ptr<const lang::Language> language_;
  PipelineConfig config_;
};

/// One user/robot interaction context. Not thread-safe; use one per thread.
class Session
{
public:
  explicit Session(std::shared_ptr<const World> world);

  const World & world() const { return *world_; }
  const std::shared_ptr<const World> & world_ptr() const { return world_; }
  nav::RobotState & robot() { return robot_; }
  const nav::RobotState & robot() const { return robot_; }

  /// Number of times pointing estimation ran in this session.
  std::uint64_t phase2_invocations() const { return phase2_invocations_; }

private:
  friend struct SessionAccess;
  std::shared_ptr<const World> world_;
  nav::RobotState robot_;
  std::uint64_t phase2_invocations_ = 0;
};

struct HandleOptions
{
  /// Runs pointing estimation even when the voice command suffices. Used to
  /// compare against the skip path; the decision itself is unchanged.
  bool force_gesture = false;
};

/// Turns one command (plus an optional skeleton) into a navigation goal or a
/// failure utterance. Never throws for bad input: every failure becomes an
/// event and the goal stays empty.
PipelineOutcome handle_command(
  Session & session, std::string_view text, const std::optional<geometry::KeypointFrame> & frame,
  Mode mode = Mode::Vgpn, const HandleOptions & options = {});

}  // namespace vgpn::pipeline

#endif  // VGPN__PIPELINE__PIPELINE_HPP_
