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

#include "vgpn/pipeline/timing.hpp"

#include "vgpn/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace vgpn::pipeline
{

FieldStats field_stats(const std::vector<double> & values)
{
  if (values.empty()) {
    throw Error(ErrorCode::EmptyInput, "no values");
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  double sq = 0.0;
  for (double v : values) {
    sq += (v - mean) * (v - mean);
  }
  return {mean, std::sqrt(sq / n)};
}

TimingSummary timing_summary(const std::vector<TimingRecord> & records)
{
  if (records.empty()) {
    throw Error(ErrorCode::EmptyInput, "no timing records");
  }
  std::vector<double> t1, t2, t3, total;
  TimingSummary out;
  for (const auto & r : records) {
    t1.push_back(r.t1);
    t2.push_back(r.t2);
    t3.push_back(r.t3);
    total.push_back(r.total);
    if (r.phase2_invoked) {
      ++out.phase2_count;
    }
  }
  out.t1 = field_stats(t1);
  out.t2 = field_stats(t2);
  out.t3 = field_stats(t3);
  out.total = field_stats(total);
  out.count = records.size();
  return out;
}

namespace
{

std::string cell(const FieldStats & s)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f(±%.6f)", s.mean / 1000.0, s.sd / 1000.0);
  return buf;
}

// Display width, counting the multibyte ± as one column.
std::size_t width(const std::string & s)
{
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) {
      ++n;
    }
  }
  return n;
}

}  // namespace

std::string format_timing_table(const std::vector<std::pair<std::string, TimingSummary>> & columns)
{
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Part (ms)"});
  for (const auto & [label, _] : columns) {
    rows.front().push_back(label);
  }
  const std::pair<const char *, FieldStats TimingSummary::*> fields[] = {
    {"T1", &TimingSummary::t1}, {"T2", &TimingSummary::t2}, {"T3", &TimingSummary::t3}, {"T", &TimingSummary::total}};
  for (const auto & [name, member] : fields) {
    std::vector<std::string> row{name};
    for (const auto & [_, summary] : columns) {
      row.push_back(cell(summary.*member));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto & row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], width(row[i]));
    }
  }
  std::ostringstream out;
  for (const auto & row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) {
        out << std::string(widths[i] - width(row[i]) + 2, ' ');
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace vgpn::pipeline
