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

#ifndef VGPN__HARNESS__SCENARIO_HPP_
#define VGPN__HARNESS__SCENARIO_HPP_

#include "vgpn/io/json_io.hpp"
#include "vgpn/pipeline/pipeline.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgpn::harness
{

enum class Experiment { Efficiency, Accuracy, SameDiff };

std::string_view to_string(Experiment e);

/// Upper edges of the distance bins, meters from the user:
/// near <= near_max < middle <= middle_max < far <= far_max.
struct DistanceBins
{
  double near_max = 2.0;
  double middle_max = 3.0;
  double far_max = 4.5;
};

/// Optional pass/fail expectations evaluated after a run.
struct Expectations
{
  bool skip_faster = false;                  // efficiency: skip total < forced total
  bool ordered = true;                       // accuracy: near < middle < far
  std::optional<double> max_offset;          // accuracy: every sample offset below
  std::optional<double> vgpn_rate;           // samediff: exact VGPN success rate
  std::optional<double> pointing_below;      // samediff: pointing-only rate strictly below
  bool vgpn_above_pointing = false;          // samediff: strict
  bool vgpn_at_least_pointing = true;        // samediff
};

struct ScenarioSpec
{
  std::string name;
  Experiment experiment = Experiment::Efficiency;
  std::string scene_path;  // resolved against the scenario file's directory
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  // efficiency: back-to-back calls per trial; the median-total call is the trial's record
  std::size_t repeats = 1;
  std::string command;
  std::vector<pipeline::Mode> modes{pipeline::Mode::Vgpn, pipeline::Mode::PointingOnly};
  double keypoint_sigma = 0.0;  // N(0, sigma^2) on every keypoint axis

  // efficiency: where the user points; defaults to the first candidate object
  std::optional<std::string> aim_object;
  std::optional<Eigen::Vector2d> aim_point;

  // accuracy
  DistanceBins bins;
  std::vector<int> targets_per_bin{2, 2, 1};
  std::vector<Eigen::Vector2d> targets;  // explicit aim points override the generated ones

  // samediff: aim ~ N(distractor, aim_sigma^2) per ground axis
  std::string intended;
  std::string distractor;
  double aim_sigma = 0.15;

  Expectations expect;
};

/// Throws Error(SpecInvalid) naming the offending field.
ScenarioSpec spec_from_json(const io::Json & doc, const std::string & base_dir = ".");
io::Json spec_to_json(const ScenarioSpec & spec);
ScenarioSpec load_spec(const std::string & path);

/// Independent RNG seed for trial `index` of a run seeded with `seed`, so
/// trials can run in any order or in parallel.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace vgpn::harness

#endif  // VGPN__HARNESS__SCENARIO_HPP_
