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

#ifndef VGPN__NAV__GRID_HPP_
#define VGPN__NAV__GRID_HPP_

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <vector>

namespace vgpn::nav
{

struct Cell
{
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell &, const Cell &) = default;
};

/// Row-major occupancy grid. `origin` is the map-frame corner of cell (0, 0);
/// cell (x, y) covers [origin + res*(x, y), origin + res*(x+1, y+1)).
class OccupancyGrid
{
public:
  OccupancyGrid() = default;
  /// Throws Error(SceneInvalid) unless resolution > 0 and
  /// cells.size() == width * height.
  OccupancyGrid(
    double resolution, int width, int height, const Eigen::Vector2d & origin,
    std::vector<std::uint8_t> cells);

  static OccupancyGrid empty(double resolution, int width, int height, const Eigen::Vector2d & origin);

  double resolution() const { return resolution_; }
  int width() const { return width_; }
  int height() const { return height_; }
  const Eigen::Vector2d & origin() const { return origin_; }
  const std::vector<std::uint8_t> & cells() const { return cells_; }

  bool in_bounds(const Cell & c) const { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }
  /// Cells outside the grid count as occupied.
  bool occupied(const Cell & c) const;
  void set_occupied(const Cell & c, bool value);

  Cell cell_of(const Eigen::Vector2d & point) const;
  Eigen::Vector2d center_of(const Cell & c) const;
  bool contains(const Eigen::Vector2d & point) const { return in_bounds(cell_of(point)); }
  bool is_free(const Eigen::Vector2d & point) const { return !occupied(cell_of(point)); }

  /// Marks every cell whose center lies within `radius` of an occupied
  /// cell's center.
  OccupancyGrid inflated(double radius) const;

private:
  std::size_t index(const Cell & c) const
  {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c.x);
  }

  double resolution_ = 1.0;
  int width_ = 0;
  int height_ = 0;
  Eigen::Vector2d origin_ = Eigen::Vector2d::Zero();
  std::vector<std::uint8_t> cells_;
};

}  // namespace vgpn::nav

#endif  // VGPN__NAV__GRID_HPP_
