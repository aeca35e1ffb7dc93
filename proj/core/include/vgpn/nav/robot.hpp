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

#ifndef VGPN__NAV__ROBOT_HPP_
#define VGPN__NAV__ROBOT_HPP_

#include <Eigen/Core>

namespace vgpn::nav
{

/// Wraps an angle into (-pi, pi].
double wrap_angle(double radians);

/// Differential-drive robot: pose plus motion limits.
struct RobotState
{
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  double heading = 0.0;    // radians, (-pi, pi]
  double radius = 0.18;    // meters
  double speed = 0.5;      // m/s
  double turn_rate = 1.0;  // rad/s
};

}  // namespace vgpn::nav

#endif  // VGPN__NAV__ROBOT_HPP_
