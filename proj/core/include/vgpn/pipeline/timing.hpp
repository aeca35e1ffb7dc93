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

#ifndef VGPN__PIPELINE__TIMING_HPP_
#define VGPN__PIPELINE__TIMING_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace vgpn::pipeline
{

/// Per-command phase durations in microseconds of a monotonic clock.
/// t1 covers command understanding, t2 pointing estimation and t3 the rest.
struct TimingRecord
{
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double total = 0.0;
  bool phase2_invoked = false;
};

struct FieldStats
{
  double mean = 0.0;
  double sd = 0.0;  // population
};

struct TimingSummary
{
  FieldStats t1;
  FieldStats t2;
  FieldStats t3;
  FieldStats total;
  std::size_t count = 0;
  std::size_t phase2_count = 0;
};

FieldStats field_stats(const std::vector<double> & values);

/// Mean and population SD of every field. Throws Error(EmptyInput).
TimingSummary timing_summary(const std::vector<TimingRecord> & records);

/// Aligned text table with one row per phase and one `mean(±SD)` column per
/// labelled summary, values in milliseconds.
std::string format_timing_table(const std::vector<std::pair<std::string, TimingSummary>> & columns);

}  // namespace vgpn::pipeline

#endif  // VGPN__PIPELINE__TIMING_HPP_
