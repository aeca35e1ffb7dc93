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

#ifndef VGPN__GEOMETRY__POINTING_HPP_
#define VGPN__GEOMETRY__POINTING_HPP_

#include "vgpn/geometry/keypoints.hpp"
#include "vgpn/geometry/transform.hpp"

#include <string_view>

namespace vgpn::geometry
{

/// Pointing configuration: right eye -> right wrist (REW) or left eye ->
/// left wrist (LEW).
enum class Arm { Right, Left };

std::string_view to_string(Arm arm);

inline constexpr double kDefaultPointingThresholdDeg = 20.0;
inline constexpr double kDegenerateArmLength = 1e-6;

/// The body's downward axis expressed in the camera frame: map -z rotated by
/// the inverse camera rotation, so a tilted camera still yields true vertical.
Eigen::Vector3d vertical_in_camera(const RigidTransform & camera_to_map);

/// Angle in radians between the eye->wrist vector of `arm` and `vertical`.
/// Throws Error(NoArmVisible) if the eye or wrist is missing.
double arm_angle(const KeypointFrame & frame, Arm arm, const Eigen::Vector3d & vertical);

/// REW when its angle to vertical is larger than LEW's (ties go to REW). If
/// only one eye/wrist pair is visible that arm is returned.
/// Throws Error(NoArmVisible) when neither pair is complete.
Arm select_arm(const KeypointFrame & frame, const Eigen::Vector3d & vertical);

/// True iff the selected arm is raised at least `min_angle_deg` from
/// vertical (inclusive).
bool detect_pointing(
  const KeypointFrame & frame, const Eigen::Vector3d & vertical,
  double min_angle_deg = kDefaultPointingThresholdDeg);

/// Map-frame pointing ray: origin T(eye), direction normalize(R (wrist - eye)).
/// Every point T(eye + t (wrist - eye)), t >= 0, lies on it.
/// Throws Error(DegenerateArm) when |wrist - eye| < 1e-6 m.
Ray pointing_ray(const KeypointFrame & frame, Arm arm, const RigidTransform & camera_to_map);

/// Point where the ray meets the plane z = ground_height.
/// Throws Error(NoGroundIntersection) for level or upward rays from above the
/// ground, or when the hit would be behind the origin.
Eigen::Vector3d ground_intersection(const Ray & ray, double ground_height = 0.0);

}  // namespace vgpn::geometry

#endif  // VGPN__GEOMETRY__POINTING_HPP_
