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

// Full command handling, with and without phase 2.

#include "vgpn/io/json_io.hpp"
#include "vgpn/pipeline/pipeline.hpp"
#include "vgpn/service/session_manager.hpp"

#include <benchmark/benchmark.h>

#include <memory>
#include <string>

namespace
{

using namespace vgpn;

std::shared_ptr<const pipeline::World> load_world()
{
  return std::make_shared<const pipeline::World>(
    io::load_scene(std::string(VGPN_BENCH_DATA_DIR) + "/scenes/unique_door.json"));
}

void bm_handle(benchmark::State & state, const char * text, bool with_frame)
{
  const auto world = load_world();
  pipeline::Session session(world);
  std::optional<geometry::KeypointFrame> frame;
  if (with_frame) {
    frame = service::frame_for_aim(world->scene(), Eigen::Vector2d(3.4, 4.2));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pipeline::handle_command(session, text, frame, pipeline::Mode::Vgpn));
  }
}
BENCHMARK_CAPTURE(bm_handle, unique_object, "go to that door", false);
BENCHMARK_CAPTURE(bm_handle, pointed_object, "go to that chair", true);
BENCHMARK_CAPTURE(bm_handle, pointed_place, "go there", true);

}  // namespace
