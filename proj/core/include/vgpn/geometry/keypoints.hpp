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

#ifndef VGPN__GEOMETRY__KEYPOINTS_HPP_
#define VGPN__GEOMETRY__KEYPOINTS_HPP_

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace vgpn::geometry
{

enum class Keypoint : std::size_t {
  RightEye,
  LeftEye,
  RightWrist,
  LeftWrist,
  Neck,
  MidHip,
};

inline constexpr std::size_t kKeypointCount = 6;

std::string_view to_string(Keypoint k);

/// Named 3D body keypoints of one person in the camera frame, meters.
/// Absent keypoints are nullopt.
class KeypointFrame
{
public:
  const std::optional<Eigen::Vector3d> & get(Keypoint k) const { return points_[index(k)]; }
  void set(Keypoint k, const Eigen::Vector3d & p) { points_[index(k)] = p; }
  void clear(Keypoint k) { points_[index(k)].reset(); }
  bool has(Keypoint k) const { return points_[index(k)].has_value(); }

  /// No keypoint present: nobody in view.
  bool empty() const;

  /// Present points must be finite, and neck plus mid-hip must be present
  /// whenever an eye or wrist is. Throws Error(InvalidFrame).
  void validate() const;

  friend bool operator==(const KeypointFrame & a, const KeypointFrame & b);

private:
  static constexpr std::size_t index(Keypoint k) { return static_cast<std::size_t>(k); }

  std::array<std::optional<Eigen::Vector3d>, kKeypointCount> points_{};
};

}  // namespace vgpn::geometry

#endif  // VGPN__GEOMETRY__KEYPOINTS_HPP_
