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

#include "vgpn/geometry/keypoints.hpp"

#include "vgpn/error.hpp"

#include <string>

namespace vgpn::geometry
{

std::string_view to_string(Keypoint k)
{
  switch (k) {
    case Keypoint::RightEye: return "right_eye";
    case Keypoint::LeftEye: return "left_eye";
    case Keypoint::RightWrist: return "right_wrist";
    case Keypoint::LeftWrist: return "left_wrist";
    case Keypoint::Neck: return "neck";
    case Keypoint::MidHip: return "mid_hip";
  }
  return "?";
}

bool KeypointFrame::empty() const
{
  for (const auto & p : points_) {
    if (p) {
      return false;
    }
  }
  return true;
}

void KeypointFrame::validate() const
{
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    if (points_[i] && !points_[i]->allFinite()) {
      throw Error(
        ErrorCode::InvalidFrame,
        std::string(to_string(static_cast<Keypoint>(i))) + " is not finite");
    }
  }
  const bool any_arm = has(Keypoint::RightEye) || has(Keypoint::LeftEye) ||
                       has(Keypoint::RightWrist) || has(Keypoint::LeftWrist);
  if (any_arm && !(has(Keypoint::Neck) && has(Keypoint::MidHip))) {
    throw Error(ErrorCode::InvalidFrame, "neck and mid_hip are required when arm keypoints are present");
  }
}

bool operator==(const KeypointFrame & a, const KeypointFrame & b)
{
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    if (a.points_[i].has_value() != b.points_[i].has_value()) {
      return false;
    }
    if (a.points_[i] && *a.points_[i] != *b.points_[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace vgpn::geometry
