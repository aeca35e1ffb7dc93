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

#include "vgpn/geometry/synthesis.hpp"

#include "vgpn/error.hpp"

#include <random>

namespace vgpn::geometry
{

KeypointFrame synthesize_frame(
  const Eigen::Vector2d & user_position, double user_height, const Eigen::Vector2d & aim_point,
  Arm arm, const RigidTransform & map_to_camera, double ground_height)
{
  const Eigen::Vector2d offset = aim_point - user_position;
  if (offset.norm() < kMinAimDistance) {
    throw Error(ErrorCode::AimTooClose, "aim point is under the user");
  }
  if (!(user_height > 0.0)) {
    throw Error(ErrorCode::InvalidFrame, "user height must be positive");
  }
  const Eigen::Vector2d facing = offset.normalized();
  const Eigen::Vector3d right_dir(facing.y(), -facing.x(), 0.0);
  // Lateral direction from the pointing side toward the other side.
  const Eigen::Vector3d to_other = arm == Arm::Right ? Eigen::Vector3d(-right_dir) : right_dir;

  const Eigen::Vector3d base(user_position.x(), user_position.y(), ground_height);
  const Eigen::Vector3d eye = base + Eigen::Vector3d(0.0, 0.0, kEyeHeightRatio * user_height);
  const Eigen::Vector3d aim(aim_point.x(), aim_point.y(), ground_height);
  const Eigen::Vector3d wrist = eye + kEyeToWrist * (aim - eye).normalized();

  constexpr double kEyeSeparation = 0.065;
  constexpr double kHangingOffset = 0.05;
  const Eigen::Vector3d other_eye = eye + kEyeSeparation * to_other;
  const Eigen::Vector3d other_wrist =
    other_eye + kHangingOffset * to_other - Eigen::Vector3d(0.0, 0.0, 0.45 * user_height);

  KeypointFrame map_frame;
  map_frame.set(arm == Arm::Right ? Keypoint::RightEye : Keypoint::LeftEye, eye);
  map_frame.set(arm == Arm::Right ? Keypoint::RightWrist : Keypoint::LeftWrist, wrist);
  map_frame.set(arm == Arm::Right ? Keypoint::LeftEye : Keypoint::RightEye, other_eye);
  map_frame.set(arm == Arm::Right ? Keypoint::LeftWrist : Keypoint::RightWrist, other_wrist);
  map_frame.set(Keypoint::Neck, base + Eigen::Vector3d(0.0, 0.0, kNeckHeightRatio * user_height));
  map_frame.set(Keypoint::MidHip, base + Eigen::Vector3d(0.0, 0.0, kHipHeightRatio * user_height));

  KeypointFrame camera_frame;
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    const auto k = static_cast<Keypoint>(i);
    camera_frame.set(k, map_to_camera.apply(*map_frame.get(k)));
  }
  return camera_frame;
}

KeypointFrame perturb_frame(const KeypointFrame & frame, double sigma, std::uint64_t seed)
{
  if (!(sigma >= 0.0)) {
    throw Error(ErrorCode::InvalidFrame, "noise sigma must be non-negative");
  }
  if (sigma == 0.0) {
    return frame;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  KeypointFrame out = frame;
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    const auto k = static_cast<Keypoint>(i);
    if (const auto & p = frame.get(k)) {
      const double dx = noise(rng);
      const double dy = noise(rng);
      const double dz = noise(rng);
      out.set(k, *p + Eigen::Vector3d(dx, dy, dz));
    }
  }
  return out;
}

}  // namespace vgpn::geometry
