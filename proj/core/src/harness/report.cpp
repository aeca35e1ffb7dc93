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

#include "vgpn/harness/report.hpp"

#include "vgpn/error.hpp"
#include "vgpn/io/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace vgpn::harness
{
namespace
{

std::string num(double v, int precision = 6)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string pm(const pipeline::FieldStats & s, double scale, int precision)
{
  return num(s.mean * scale, precision) + "(±" + num(s.sd * scale, precision) + ")";
}

std::size_t display_width(const std::string & s)
{
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

io::Json checks_json(const std::vector<Check> & checks)
{
  io::Json out = io::Json::array();
  for (const auto & c : checks) {
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

std::string header(const ScenarioSpec & spec, const io::Json & spec_json)
{
  return spec.name + " (" + std::string(to_string(spec.experiment)) + ")\nscenario: " + spec_json.dump() + "\n\n";
}

}  // namespace

std::string align_table(const std::vector<std::vector<std::string>> & rows)
{
  std::vector<std::size_t> widths;
  for (const auto & row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(row[i]));
    }
  }
  std::ostringstream out;
  for (const auto & row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) {
        out << std::string(widths[i] - display_width(row[i]) + 2, ' ');
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string format_checks(const std::vector<Check> & checks)
{
  std::string out;
  for (const auto & c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name + " (" + c.detail + ")\n";
  }
  return out;
}

Report make_report(const ScenarioSpec & spec, const EfficiencyReport & r)
{
  Report out;
  out.name = spec.name;
  out.spec = spec_to_json(spec);
  out.checks = r.checks;
  io::Json rows = io::Json::array();
  std::string csv = "mode,trials,phase2_invocations,failures,t1_mean_us,t1_sd_us,t2_mean_us,t2_sd_us,t3_mean_us,t3_sd_us,total_mean_us,total_sd_us\n";
  std::vector<std::pair<std::string, pipeline::TimingSummary>> columns;
  for (const auto & row : r.rows) {
    io::Json j = io::to_json(row.summary);
    j["mode"] = row.label;
    j["phase2_invocations"] = row.phase2_invocations;
    j["failures"] = row.failures;
    rows.push_back(j);
    const auto & s = row.summary;
    csv += row.label + "," + std::to_string(s.count) + "," + std::to_string(row.phase2_invocations) + "," +
           std::to_string(row.failures);
    for (const auto * f : {&s.t1, &s.t2, &s.t3, &s.total}) {
      csv += "," + num(f->mean, 3) + "," + num(f->sd, 3);
    }
    csv += "\n";
    columns.emplace_back(row.label, row.summary);
  }
  out.results = {{"rows", rows}, {"checks", checks_json(r.checks)}};
  out.csv = csv;
  out.text = header(spec, out.spec) + pipeline::format_timing_table(columns) + "\n" + format_checks(r.checks);
  return out;
}

Report make_report(const ScenarioSpec & spec, const AccuracyReport & r)
{
  Report out;
  out.name = spec.name;
  out.spec = spec_to_json(spec);
  out.checks = r.checks;
  io::Json bins = io::Json::array();
  std::string csv = "bin,targets,samples,failures,dx_mean_m,dx_sd_m,dy_mean_m,dy_sd_m,dist_mean_m,dist_sd_m\n";
  std::vector<std::vector<std::string>> table{{"Bin", "Targets", "Samples", "|dx| cm", "|dy| cm", "distance cm"}};
  for (const auto & b : r.bins) {
    io::Json targets = io::Json::array();
    for (const auto & t : b.targets) {
      targets.push_back(io::vector_json(t));
    }
    auto stats = [](const pipeline::FieldStats & s) { return io::Json{{"mean_m", s.mean}, {"sd_m", s.sd}}; };
    bins.push_back(
      {{"bin", b.name}, {"targets", targets}, {"samples", b.samples}, {"failures", b.failures},
       {"dx", stats(b.dx)}, {"dy", stats(b.dy)}, {"distance", stats(b.distance)}});
    csv += b.name + "," + std::to_string(b.targets.size()) + "," + std::to_string(b.samples) + "," +
           std::to_string(b.failures);
    for (const auto * f : {&b.dx, &b.dy, &b.distance}) {
      csv += "," + num(f->mean, 9) + "," + num(f->sd, 9);
    }
    csv += "\n";
    table.push_back(
      {b.name, std::to_string(b.targets.size()), std::to_string(b.samples), pm(b.dx, 100.0, 3),
       pm(b.dy, 100.0, 3), pm(b.distance, 100.0, 3)});
  }
  out.results = {{"bins", bins}, {"checks", checks_json(r.checks)}};
  out.csv = csv;
  out.text = header(spec, out.spec) + align_table(table) + "\n" + format_checks(r.checks);
  return out;
}

Report make_report(const ScenarioSpec & spec, const SameDiffReport & r)
{
  Report out;
  out.name = spec.name;
  out.spec = spec_to_json(spec);
  out.checks = r.checks;
  io::Json rows = io::Json::array();
  std::string csv = "mode,trials,successes,failures,success_rate\n";
  std::vector<std::vector<std::string>> table{{"Mode", "Trials", "Successes", "No goal", "Success rate"}};
  for (const auto & row : r.rows) {
    const std::string mode(pipeline::to_string(row.mode));
    rows.push_back(
      {{"mode", mode}, {"trials", row.trials}, {"successes", row.successes}, {"failures", row.failures},
       {"success_rate", row.rate}});
    csv += mode + "," + std::to_string(row.trials) + "," + std::to_string(row.successes) + "," +
           std::to_string(row.failures) + "," + num(row.rate, 4) + "\n";
    table.push_back(
      {mode, std::to_string(row.trials), std::to_string(row.successes), std::to_string(row.failures),
       num(row.rate, 4)});
  }
  out.results = {{"rows", rows}, {"checks", checks_json(r.checks)}};
  out.csv = csv;
  out.text = header(spec, out.spec) + align_table(table) + "\n" + format_checks(r.checks);
  return out;
}

Report run_scenario(const ScenarioSpec & spec)
{
  auto world = std::make_shared<const pipeline::World>(io::load_scene(spec.scene_path));
  switch (spec.experiment) {
    case Experiment::Efficiency: return make_report(spec, run_efficiency(spec, world));
    case Experiment::Accuracy: return make_report(spec, run_accuracy(spec, world));
    case Experiment::SameDiff: return make_report(spec, run_same_diff(spec, world));
  }
  throw Error(ErrorCode::SpecInvalid, "unknown experiment");
}

std::vector<std::string> write_report(const Report & report, const std::string & dir)
{
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path base = fs::path(dir) / report.name;
  std::vector<std::string> written;
  auto write = [&](const std::string & ext, const std::string & content) {
    const std::string path = base.string() + ext;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(ErrorCode::SpecInvalid, path + ": cannot write");
    }
    out << content;
    written.push_back(path);
  };
  write(".csv", report.csv);
  write(".txt", report.text);
  io::Json doc = {{"schema_version", io::kSchemaVersion}, {"scenario", report.spec}, {"results", report.results}};
  write(".json", doc.dump(2) + "\n");
  return written;
}

}  // namespace vgpn::harness
