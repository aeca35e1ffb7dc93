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

#include "vgpn/nav/grid.hpp"

#include "vgpn/error.hpp"

#include <cmath>
#include <string>

namespace vgpn::nav
{

OccupancyGrid::OccupancyGrid(
  double resolution, int width, int height, const Eigen::Vector2d & origin,
  std::vector<std::uint8_t> cells)
: resolution_(resolution), width_(width), height_(height), origin_(origin), cells_(std::move(cells))
{
  if (!(resolution_ > 0.0) || !std::isfinite(resolution_)) {
    throw Error(ErrorCode::SceneInvalid, "grid.resolution must be > 0");
  }
  if (width_ <= 0 || height_ <= 0) {
    throw Error(ErrorCode::SceneInvalid, "grid.width and grid.height must be positive");
  }
  const auto expected = static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  if (cells_.size() != expected) {
    throw Error(
      ErrorCode::SceneInvalid, "grid has " + std::to_string(cells_.size()) + " cells, expected " +
                                 std::to_string(expected));
  }
  for (auto & c : cells_) {
    c = c != 0 ? 1 : 0;
  }
}

OccupancyGrid OccupancyGrid::empty(double resolution, int width, int height, const Eigen::Vector2d & origin)
{
  return OccupancyGrid(
    resolution, width, height, origin,
    std::vector<std::uint8_t>(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0));
}

bool OccupancyGrid::occupied(const Cell & c) const
{
  return !in_bounds(c) || cells_[index(c)] != 0;
}

void OccupancyGrid::set_occupied(const Cell & c, bool value)
{
  if (in_bounds(c)) {
    cells_[index(c)] = value ? 1 : 0;
  }
}

Cell OccupancyGrid::cell_of(const Eigen::Vector2d & point) const
{
  const Eigen::Vector2d rel = (point - origin_) / resolution_;
  return Cell{static_cast<int>(std::floor(rel.x())), static_cast<int>(std::floor(rel.y()))};
}

Eigen::Vector2d OccupancyGrid::center_of(const Cell & c) const
{
  return origin_ + resolution_ * Eigen::Vector2d(c.x + 0.5, c.y + 0.5);
}

OccupancyGrid OccupancyGrid::inflated(double radius) const
{
  OccupancyGrid out = *this;
  if (radius <= 0.0) {
    return out;
  }
  const int reach = static_cast<int>(std::ceil(radius / resolution_));
  const double limit = radius / resolution_ + 1e-9;
  std::vector<Cell> stencil;
  for (int dy = -reach; dy <= reach; ++dy) {
    for (int dx = -reach; dx <= reach; ++dx) {
      if (std::hypot(dx, dy) <= limit) {
        stencil.push_back(Cell{dx, dy});
      }
    }
  }
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (cells_[index(Cell{x, y})] == 0) {
        continue;
      }
      for (const auto & s : stencil) {
        out.set_occupied(Cell{x + s.x, y + s.y}, true);
      }
    }
  }
  return out;
}

}  // namespace vgpn::nav
