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

#ifndef VGPN__GEOMETRY__SYNTHESIS_HPP_
#define VGPN__GEOMETRY__SYNTHESIS_HPP_

#include "vgpn/geometry/keypoints.hpp"
#include "vgpn/geometry/pointing.hpp"
#include "vgpn/geometry/transform.hpp"

#include <cstdint>

namespace vgpn::geometry
{

/// Body proportions used for synthetic skeletons, as fractions of height.
inline constexpr double kEyeHeightRatio = 0.92;
inline constexpr double kNeckHeightRatio = 0.82;
inline constexpr double kHipHeightRatio = 0.52;
inline constexpr double kEyeToWrist = 0.45;  // meters, along the aim line
inline constexpr double kMinAimDistance = 0.05;

/// Skeleton of a user at `user_position` aiming `arm` at a ground point.
///
/// The pointing eye sits at user_position + (0, 0, 0.92 h) and the wrist
/// 0.45 m from it on the eye->aim line, so pointing_ray followed by
/// ground_intersection returns `aim_point`. The other arm hangs almost
/// vertically. Points are produced in the camera frame through
/// `map_to_camera` (the inverse of the camera pose).
/// Throws Error(AimTooClose) if the aim is within 0.05 m of the user.
KeypointFrame synthesize_frame(
  const Eigen::Vector2d & user_position, double user_height, const Eigen::Vector2d & aim_point,
  Arm arm, const RigidTransform & map_to_camera, double ground_height = 0.0);

/// Adds independent N(0, sigma^2) offsets to every axis of every present
/// keypoint. Deterministic for a given seed; sigma = 0 returns the input.
KeypointFrame perturb_frame(const KeypointFrame & frame, double sigma, std::uint64_t seed);

}  // namespace vgpn::geometry

#endif  // VGPN__GEOMETRY__SYNTHESIS_HPP_
