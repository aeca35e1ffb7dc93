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

#include "vgpn/nav/robot.hpp"

#include <cmath>
#include <numbers>

namespace vgpn::nav
{

double wrap_angle(double radians)
{
  double a = std::remainder(radians, 2.0 * std::numbers::pi);  // [-pi, pi]
  if (a <= -std::numbers::pi) {
    a += 2.0 * std::numbers::pi;
  }
  return a;
}

}  // namespace vgpn::nav
