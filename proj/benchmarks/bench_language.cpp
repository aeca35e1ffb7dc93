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

// Phase-1 parsing throughput.

#include "vgpn/lang/language.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

namespace
{

void bm_understand(benchmark::State & state)
{
  const std::vector<std::string> commands{
    "go to that chair", "go there", "go to that black chair", "turn 90 degree left", "move forward 1 meter"};
  const auto & language = vgpn::lang::Language::builtin();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(language.understand(commands[i++ % commands.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_understand);

}  // namespace
