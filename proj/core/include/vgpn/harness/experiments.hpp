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

#ifndef VGPN__HARNESS__EXPERIMENTS_HPP_
#define VGPN__HARNESS__EXPERIMENTS_HPP_

#include "vgpn/harness/scenario.hpp"
#include "vgpn/pipeline/pipeline.hpp"
#include "vgpn/pipeline/timing.hpp"
#include "vgpn/world/scene.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace vgpn::harness
{

struct Check
{
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<Check> & checks);

struct EfficiencyRow
{
  std::string label;  // "pointing-only", "vgpn" or "vgpn-forced"
  pipeline::TimingSummary summary;
  std::uint64_t phase2_invocations = 0;
  std::size_t failures = 0;  // outcomes without a goal
};

struct EfficiencyReport
{
  std::vector<EfficiencyRow> rows;
  std::vector<Check> checks;

  const EfficiencyRow * row(const std::string & label) const;
};

struct AccuracyBin
{
  std::string name;  // near, middle, far
  std::vector<Eigen::Vector2d> targets;
  std::size_t samples = 0;
  std::size_t failures = 0;  // frames without a usable intersection
  pipeline::FieldStats dx;
  pipeline::FieldStats dy;
  pipeline::FieldStats distance;
};

struct AccuracyReport
{
  std::vector<AccuracyBin> bins;
  std::vector<Check> checks;
};

struct SameDiffRow
{
  pipeline::Mode mode = pipeline::Mode::Vgpn;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;  // outcomes without a goal
  double rate = 0.0;
};

struct SameDiffReport
{
  std::vector<SameDiffRow> rows;
  std::vector<Check> checks;

  const SameDiffRow * row(pipeline::Mode mode) const;
};

/// Timing of `trials` interleaved runs per row: VGPN as decided, VGPN with
/// pointing estimation forced, and pointing-only. The command must not need
/// a gesture in the scene (Error(SpecInvalid) otherwise).
EfficiencyReport run_efficiency(const ScenarioSpec & spec, std::shared_ptr<const pipeline::World> world);

/// Intersection offsets from noiseless aim points under keypoint noise,
/// binned by the aim point's distance from the user.
AccuracyReport run_accuracy(const ScenarioSpec & spec, std::shared_ptr<const pipeline::World> world);

/// Correct-object rate with aim drawn around the distractor. VGPN succeeds
/// when the goal is the intended object; pointing-only when the intended
/// object is the one nearest the goal point.
SameDiffReport run_same_diff(const ScenarioSpec & spec, std::shared_ptr<const pipeline::World> world);

/// Aim points used by run_accuracy when the scenario lists none.
std::vector<Eigen::Vector2d> default_accuracy_targets(const ScenarioSpec & spec, const world::Scene & scene);

}  // namespace vgpn::harness

#endif  // VGPN__HARNESS__EXPERIMENTS_HPP_
