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

#ifndef VGPN__IO__JSON_IO_HPP_
#define VGPN__IO__JSON_IO_HPP_

#include "vgpn/geometry/keypoints.hpp"
#include "vgpn/lang/instruction.hpp"
#include "vgpn/lang/language.hpp"
#include "vgpn/nav/execute.hpp"
#include "vgpn/pipeline/pipeline.hpp"
#include "vgpn/pipeline/timing.hpp"
#include "vgpn/world/scene.hpp"
#include "vgpn/world/target.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace vgpn::io
{

using Json = nlohmann::ordered_json;

/// Version stamped on every document this library writes.
inline constexpr int kSchemaVersion = 1;

/// Reads a scene document. Errors are Error(SceneInvalid) naming the JSON
/// path of the offending field, e.g. `objects[2].position`.
world::Scene scene_from_json(const Json & doc);
Json scene_to_json(const world::Scene & scene);
world::Scene load_scene(const std::string & path);

/// `{"right_eye": [x, y, z], ...}`; absent keys are absent keypoints.
/// Throws Error(InvalidFrame).
geometry::KeypointFrame frame_from_json(const Json & doc);
Json frame_to_json(const geometry::KeypointFrame & frame);

Json to_json(const lang::Instruction & instruction);
Json to_json(const world::NavigationGoal & goal);
Json to_json(const pipeline::TimingRecord & timing);
Json to_json(const pipeline::TimingSummary & summary);
Json to_json(const nav::Trajectory & trajectory);
Json to_json(const lang::Understanding & understanding);

/// Outcome document. With `include_timing` false the four durations are
/// left out (phase2_invoked stays), which makes outcomes of separate runs
/// comparable byte for byte.
Json to_json(const pipeline::PipelineOutcome & outcome, bool include_timing = true);

Json vector_json(const Eigen::Vector2d & v);
Json vector_json(const Eigen::Vector3d & v);

}  // namespace vgpn::io

#endif  // VGPN__IO__JSON_IO_HPP_
