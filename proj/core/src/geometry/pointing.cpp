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

#include "vgpn/geometry/pointing.hpp"

#include "vgpn/error.hpp"

#include <cmath>
#include <numbers>

namespace vgpn::geometry
{
namespace
{

struct ArmKeypoints
{
  Keypoint eye;
  Keypoint wrist;
};

constexpr ArmKeypoints keypoints_of(Arm arm)
{
  return arm == Arm::Right ? ArmKeypoints{Keypoint::RightEye, Keypoint::RightWrist}
                           : ArmKeypoints{Keypoint::LeftEye, Keypoint::LeftWrist};
}

bool arm_visible(const KeypointFrame & frame, Arm arm)
{
  const auto k = keypoints_of(arm);
  return frame.has(k.eye) && frame.has(k.wrist);
}

// atan2(|a x b|, a . b) stays accurate near 0 and pi, unlike acos.
double angle_between(const Eigen::Vector3d & a, const Eigen::Vector3d & b)
{
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

}  // namespace

std::string_view to_string(Arm arm)
{
  return arm == Arm::Right ? "REW" : "LEW";
}

Eigen::Vector3d vertical_in_camera(const RigidTransform & camera_to_map)
{
  return camera_to_map.rotation().transpose() * Eigen::Vector3d(0.0, 0.0, -1.0);
}

double arm_angle(const KeypointFrame & frame, Arm arm, const Eigen::Vector3d & vertical)
{
  if (!arm_visible(frame, arm)) {
    throw Error(ErrorCode::NoArmVisible, std::string(to_string(arm)) + " keypoints missing");
  }
  const auto k = keypoints_of(arm);
  return angle_between(*frame.get(k.wrist) - *frame.get(k.eye), vertical);
}

Arm select_arm(const KeypointFrame & frame, const Eigen::Vector3d & vertical)
{
  const bool right = arm_visible(frame, Arm::Right);
  const bool left = arm_visible(frame, Arm::Left);
  if (!right && !left) {
    throw Error(ErrorCode::NoArmVisible, "no complete eye/wrist pair");
  }
  if (right != left) {
    return right ? Arm::Right : Arm::Left;
  }
  const double rew = arm_angle(frame, Arm::Right, vertical);
  const double lew = arm_angle(frame, Arm::Left, vertical);
  return rew >= lew ? Arm::Right : Arm::Left;
}

bool detect_pointing(const KeypointFrame & frame, const Eigen::Vector3d & vertical, double min_angle_deg)
{
  const Arm arm = select_arm(frame, vertical);
  const double angle_deg = arm_angle(frame, arm, vertical) * 180.0 / std::numbers::pi;
  // Inclusive threshold; the slack absorbs rounding in the angle itself.
  return angle_deg >= min_angle_deg - 1e-9;
}

Ray pointing_ray(const KeypointFrame & frame, Arm arm, const RigidTransform & camera_to_map)
{
  if (!arm_visible(frame, arm)) {
    throw Error(ErrorCode::NoArmVisible, std::string(to_string(arm)) + " keypoints missing");
  }
  const auto k = keypoints_of(arm);
  const Eigen::Vector3d & eye = *frame.get(k.eye);
  const Eigen::Vector3d arm_vector = *frame.get(k.wrist) - eye;
  if (arm_vector.norm() < kDegenerateArmLength) {
    throw Error(ErrorCode::DegenerateArm, "eye and wrist coincide");
  }
  return Ray(camera_to_map.apply(eye), camera_to_map.rotate(arm_vector).normalized());
}

Eigen::Vector3d ground_intersection(const Ray & ray, double ground_height)
{
  const Eigen::Vector3d & o = ray.origin();
  const Eigen::Vector3d & d = ray.direction();
  constexpr double kLevel = 1e-9;
  if (o.z() > ground_height && d.z() >= -kLevel) {
    throw Error(ErrorCode::NoGroundIntersection, "ray is level with or rising above the ground");
  }
  if (std::abs(d.z()) < kLevel) {
    throw Error(ErrorCode::NoGroundIntersection, "ray is parallel to the ground");
  }
  const double t = (ground_height - o.z()) / d.z();
  if (!(t > 0.0)) {
    throw Error(ErrorCode::NoGroundIntersection, "ground lies behind the ray origin");
  }
  Eigen::Vector3d hit = ray.at(t);
  hit.z() = ground_height;
  return hit;
}

}  // namespace vgpn::geometry
