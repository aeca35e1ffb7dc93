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

// Arm selection, ray construction and ground intersection.

#include "vgpn/geometry/pointing.hpp"
#include "vgpn/geometry/synthesis.hpp"
#include "vgpn/io/json_io.hpp"

#include <benchmark/benchmark.h>

namespace
{

void bm_pointing_target(benchmark::State & state)
{
  using namespace vgpn;
  const auto scene = io::load_scene(std::string(VGPN_BENCH_DATA_DIR) + "/scenes/unique_door.json");
  const auto frame = geometry::synthesize_frame(
    scene.user.position, scene.user.height, Eigen::Vector2d(3.4, 4.2), geometry::Arm::Right, scene.camera.inverse(),
    scene.ground_height);
  const Eigen::Vector3d vertical = geometry::vertical_in_camera(scene.camera);
  for (auto _ : state) {
    const auto arm = geometry::select_arm(frame, vertical);
    benchmark::DoNotOptimize(
      geometry::ground_intersection(geometry::pointing_ray(frame, arm, scene.camera), scene.ground_height));
  }
}
BENCHMARK(bm_pointing_target);

}  // namespace
