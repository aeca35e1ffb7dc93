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

#ifndef VGPN__HARNESS__REPORT_HPP_
#define VGPN__HARNESS__REPORT_HPP_

#include "vgpn/harness/experiments.hpp"
#include "vgpn/harness/scenario.hpp"
#include "vgpn/io/json_io.hpp"

#include <string>
#include <vector>

namespace vgpn::harness
{

/// A finished run: the generating spec, results as JSON, a CSV table and an
/// aligned text table, plus the checks.
struct Report
{
  std::string name;
  io::Json spec;
  io::Json results;
  std::string csv;
  std::string text;
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

Report make_report(const ScenarioSpec & spec, const EfficiencyReport & r);
Report make_report(const ScenarioSpec & spec, const AccuracyReport & r);
Report make_report(const ScenarioSpec & spec, const SameDiffReport & r);

/// Loads the scene and runs the experiment the scenario names.
Report run_scenario(const ScenarioSpec & spec);

/// Writes `<name>.csv`, `<name>.txt` and `<name>.json` into `dir`, creating
/// it if needed. Returns the paths written.
std::vector<std::string> write_report(const Report & report, const std::string & dir);

/// Checks as `PASS name (detail)` / `FAIL name (detail)` lines.
std::string format_checks(const std::vector<Check> & checks);

/// Column-aligned rendering of rows of cells.
std::string align_table(const std::vector<std::vector<std::string>> & rows);

}  // namespace vgpn::harness

#endif  // VGPN__HARNESS__REPORT_HPP_
