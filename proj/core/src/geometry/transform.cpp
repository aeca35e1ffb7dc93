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

#include "vgpn/geometry/transform.hpp"

#include "vgpn/error.hpp"

#include <cmath>

namespace vgpn::geometry
{

RigidTransform::RigidTransform()
: rotation_(Eigen::Matrix3d::Identity()), translation_(Eigen::Vector3d::Zero())
{
}

RigidTransform::RigidTransform(const Eigen::Matrix3d & rotation, const Eigen::Vector3d & translation)
: rotation_(rotation), translation_(translation)
{
  constexpr double kTolerance = 1e-9;
  if (!rotation_.allFinite() || !translation_.allFinite()) {
    throw Error(ErrorCode::InvalidTransform, "non-finite rotation or translation");
  }
  const double orthogonality =
    (rotation_.transpose() * rotation_ - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (orthogonality > kTolerance) {
    throw Error(ErrorCode::InvalidTransform, "rotation is not orthonormal");
  }
  if (std::abs(rotation_.determinant() - 1.0) > kTolerance) {
    throw Error(ErrorCode::InvalidTransform, "rotation determinant is not +1");
  }
}

RigidTransform RigidTransform::from_quaternion(
  const Eigen::Quaterniond & q, const Eigen::Vector3d & translation)
{
  if (q.norm() < 1e-12) {
    throw Error(ErrorCode::InvalidTransform, "zero quaternion");
  }
  return RigidTransform(q.normalized().toRotationMatrix(), translation);
}

RigidTransform RigidTransform::inverse() const
{
  const Eigen::Matrix3d rt = rotation_.transpose();
  return RigidTransform(rt, -(rt * translation_));
}

RigidTransform RigidTransform::operator*(const RigidTransform & rhs) const
{
  return RigidTransform(rotation_ * rhs.rotation_, rotation_ * rhs.translation_ + translation_);
}

Ray::Ray(const Eigen::Vector3d & origin, const Eigen::Vector3d & direction)
: origin_(origin), direction_(direction)
{
  if (!origin_.allFinite() || !direction_.allFinite() || std::abs(direction_.norm() - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidTransform, "ray direction must be a finite unit vector");
  }
}

}  // namespace vgpn::geometry
