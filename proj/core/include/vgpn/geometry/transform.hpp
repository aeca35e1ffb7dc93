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

#ifndef VGPN__GEOMETRY__TRANSFORM_HPP_
#define VGPN__GEOMETRY__TRANSFORM_HPP_

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace vgpn::geometry
{

/// Proper rigid motion x -> R x + t. The constructor rejects rotations that
/// are not orthonormal with det +1 (tolerance 1e-9).
class RigidTransform
{
public:
  RigidTransform();
  RigidTransform(const Eigen::Matrix3d & rotation, const Eigen::Vector3d & translation);

  static RigidTransform identity() { return RigidTransform(); }
  static RigidTransform from_quaternion(
    const Eigen::Quaterniond & q, const Eigen::Vector3d & translation);

  const Eigen::Matrix3d & rotation() const { return rotation_; }
  const Eigen::Vector3d & translation() const { return translation_; }

  Eigen::Vector3d apply(const Eigen::Vector3d & point) const { return rotation_ * point + translation_; }
  Eigen::Vector3d rotate(const Eigen::Vector3d & v) const { return rotation_ * v; }

  RigidTransform inverse() const;
  RigidTransform operator*(const RigidTransform & rhs) const;

private:
  Eigen::Matrix3d rotation_;
  Eigen::Vector3d translation_;
};

/// Straight-line ray with unit direction, parameter t >= 0.
class Ray
{
public:
  /// Throws Error(InvalidTransform) unless |direction| = 1 within 1e-9.
  Ray(const Eigen::Vector3d & origin, const Eigen::Vector3d & direction);

  const Eigen::Vector3d & origin() const { return origin_; }
  const Eigen::Vector3d & direction() const { return direction_; }
  Eigen::Vector3d at(double t) const { return origin_ + t * direction_; }

private:
  Eigen::Vector3d origin_;
  Eigen::Vector3d direction_;
};

}  // namespace vgpn::geometry

#endif  // VGPN__GEOMETRY__TRANSFORM_HPP_
