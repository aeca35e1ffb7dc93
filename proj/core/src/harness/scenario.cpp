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

#include "vgpn/harness/scenario.hpp"

#include "vgpn/error.hpp"

#include <filesystem>
#include <fstream>

namespace vgpn::harness
{

std::string_view to_string(Experiment e)
{
  switch (e) {
    case Experiment::Efficiency: return "efficiency";
    case Experiment::Accuracy: return "accuracy";
    case Experiment::SameDiff: return "samediff";
  }
  return "?";
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index)
{
  // splitmix64 over a combination of both inputs
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace
{

[[noreturn]] void invalid(const std::string & field, const std::string & what)
{
  throw Error(ErrorCode::SpecInvalid, field + ": " + what);
}

double number(const io::Json & doc, const char * key, double fallback)
{
  if (!doc.contains(key)) {
    return fallback;
  }
  if (!doc.at(key).is_number()) {
    invalid(key, "expected a number");
  }
  return doc.at(key).get<double>();
}

std::uint64_t count(const io::Json & doc, const char * key, std::uint64_t fallback)
{
  if (!doc.contains(key)) {
    return fallback;
  }
  if (!doc.at(key).is_number_unsigned()) {
    invalid(key, "expected a non-negative integer");
  }
  return doc.at(key).get<std::uint64_t>();
}

std::string text(const io::Json & doc, const char * key, const std::string & fallback = {})
{
  if (!doc.contains(key)) {
    return fallback;
  }
  if (!doc.at(key).is_string()) {
    invalid(key, "expected a string");
  }
  return doc.at(key).get<std::string>();
}

Eigen::Vector2d point(const io::Json & v, const std::string & field)
{
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    invalid(field, "expected [x, y]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

ScenarioSpec spec_from_json(const io::Json & doc, const std::string & base_dir)
{
  if (!doc.is_object()) {
    invalid("document", "expected an object");
  }
  if (doc.contains("schema_version") && doc.at("schema_version") != io::kSchemaVersion) {
    invalid("schema_version", "unsupported version");
  }
  ScenarioSpec spec;
  spec.name = text(doc, "name", "scenario");
  const std::string experiment = text(doc, "experiment");
  if (experiment == "efficiency") {
    spec.experiment = Experiment::Efficiency;
  } else if (experiment == "accuracy") {
    spec.experiment = Experiment::Accuracy;
  } else if (experiment == "samediff") {
    spec.experiment = Experiment::SameDiff;
  } else {
    invalid("experiment", "expected efficiency, accuracy or samediff");
  }
  const std::string scene = text(doc, "scene");
  if (scene.empty()) {
    invalid("scene", "missing");
  }
  const std::filesystem::path scene_path(scene);
  spec.scene_path = scene_path.is_absolute() ? scene : (std::filesystem::path(base_dir) / scene_path).lexically_normal().string();
  spec.trials = count(doc, "trials", spec.trials);
  if (spec.trials < 1) {
    invalid("trials", "must be >= 1");
  }
  spec.seed = count(doc, "seed", spec.seed);
  spec.repeats = count(doc, "repeats", spec.repeats);
  if (spec.repeats < 1) {
    invalid("repeats", "must be >= 1");
  }
  spec.threads = count(doc, "threads", spec.threads);
  if (spec.threads < 1) {
    invalid("threads", "must be >= 1");
  }
  spec.command = text(doc, "command");
  if (spec.experiment != Experiment::Accuracy && spec.command.empty()) {
    invalid("command", "missing");
  }
  if (doc.contains("modes")) {
    if (!doc.at("modes").is_array() || doc.at("modes").empty()) {
      invalid("modes", "expected a nonempty array");
    }
    spec.modes.clear();
    for (const auto & m : doc.at("modes")) {
      if (!m.is_string()) {
        invalid("modes", "expected strings");
      }
      try {
        spec.modes.push_back(pipeline::mode_from_string(m.get<std::string>()));
      } catch (const Error & e) {
        invalid("modes", e.message());
      }
    }
  }
  spec.keypoint_sigma = number(doc, "keypoint_sigma", spec.keypoint_sigma);
  if (!(spec.keypoint_sigma >= 0.0)) {
    invalid("keypoint_sigma", "must be >= 0");
  }
  if (doc.contains("aim")) {
    const auto & aim = doc.at("aim");
    if (aim.contains("object")) {
      spec.aim_object = text(aim, "object");
    } else if (aim.contains("point")) {
      spec.aim_point = point(aim.at("point"), "aim.point");
    } else {
      invalid("aim", "expected \"object\" or \"point\"");
    }
  }
  if (doc.contains("bins")) {
    const auto & b = doc.at("bins");
    spec.bins.near_max = number(b, "near", spec.bins.near_max);
    spec.bins.middle_max = number(b, "middle", spec.bins.middle_max);
    spec.bins.far_max = number(b, "far", spec.bins.far_max);
  }
  if (!(0.0 < spec.bins.near_max && spec.bins.near_max < spec.bins.middle_max &&
        spec.bins.middle_max < spec.bins.far_max)) {
    invalid("bins", "must satisfy 0 < near < middle < far");
  }
  if (doc.contains("targets_per_bin")) {
    const auto & t = doc.at("targets_per_bin");
    if (!t.is_array() || t.size() != 3) {
      invalid("targets_per_bin", "expected [near, middle, far]");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t[i].is_number_integer() || t[i].get<int>() < 1) {
        invalid("targets_per_bin", "counts must be >= 1");
      }
      spec.targets_per_bin[i] = t[i].get<int>();
    }
  }
  if (doc.contains("targets")) {
    if (!doc.at("targets").is_array()) {
      invalid("targets", "expected an array of [x, y]");
    }
    for (std::size_t i = 0; i < doc.at("targets").size(); ++i) {
      spec.targets.push_back(point(doc.at("targets")[i], "targets[" + std::to_string(i) + "]"));
    }
  }
  spec.intended = text(doc, "intended");
  spec.distractor = text(doc, "distractor");
  spec.aim_sigma = number(doc, "aim_sigma", spec.aim_sigma);
  if (!(spec.aim_sigma >= 0.0)) {
    invalid("aim_sigma", "must be >= 0");
  }
  if (spec.experiment == Experiment::SameDiff && (spec.intended.empty() || spec.distractor.empty())) {
    invalid("intended", "samediff needs intended and distractor object ids");
  }
  if (doc.contains("expect")) {
    const auto & e = doc.at("expect");
    auto flag = [&](const char * key, bool fallback) {
      if (!e.contains(key)) {
        return fallback;
      }
      if (!e.at(key).is_boolean()) {
        invalid(std::string("expect.") + key, "expected true or false");
      }
      return e.at(key).get<bool>();
    };
    spec.expect.skip_faster = flag("skip_faster", spec.expect.skip_faster);
    spec.expect.ordered = flag("ordered", spec.expect.ordered);
    spec.expect.vgpn_above_pointing = flag("vgpn_above_pointing", spec.expect.vgpn_above_pointing);
    spec.expect.vgpn_at_least_pointing = flag("vgpn_at_least_pointing", spec.expect.vgpn_at_least_pointing);
    if (e.contains("max_offset")) {
      spec.expect.max_offset = number(e, "max_offset", 0.0);
    }
    if (e.contains("vgpn_rate")) {
      spec.expect.vgpn_rate = number(e, "vgpn_rate", 0.0);
    }
    if (e.contains("pointing_below")) {
      spec.expect.pointing_below = number(e, "pointing_below", 0.0);
    }
  }
  return spec;
}

io::Json spec_to_json(const ScenarioSpec & spec)
{
  io::Json doc;
  doc["schema_version"] = io::kSchemaVersion;
  doc["name"] = spec.name;
  doc["experiment"] = std::string(to_string(spec.experiment));
  doc["scene"] = spec.scene_path;
  doc["trials"] = spec.trials;
  doc["seed"] = spec.seed;
  doc["repeats"] = spec.repeats;
  doc["threads"] = spec.threads;
  doc["command"] = spec.command;
  io::Json modes = io::Json::array();
  for (auto m : spec.modes) {
    modes.push_back(std::string(pipeline::to_string(m)));
  }
  doc["modes"] = modes;
  doc["keypoint_sigma"] = spec.keypoint_sigma;
  if (spec.aim_object) {
    doc["aim"] = {{"object", *spec.aim_object}};
  } else if (spec.aim_point) {
    doc["aim"] = {{"point", io::vector_json(*spec.aim_point)}};
  }
  switch (spec.experiment) {
    case Experiment::Efficiency:
      doc["expect"] = {{"skip_faster", spec.expect.skip_faster}};
      break;
    case Experiment::Accuracy: {
      doc["bins"] = {{"near", spec.bins.near_max}, {"middle", spec.bins.middle_max}, {"far", spec.bins.far_max}};
      doc["targets_per_bin"] = spec.targets_per_bin;
      io::Json targets = io::Json::array();
      for (const auto & t : spec.targets) {
        targets.push_back(io::vector_json(t));
      }
      doc["targets"] = targets;
      io::Json e = {{"ordered", spec.expect.ordered}};
      if (spec.expect.max_offset) {
        e["max_offset"] = *spec.expect.max_offset;
      }
      doc["expect"] = e;
      break;
    }
    case Experiment::SameDiff: {
      doc["intended"] = spec.intended;
      doc["distractor"] = spec.distractor;
      doc["aim_sigma"] = spec.aim_sigma;
      io::Json e = {
        {"vgpn_above_pointing", spec.expect.vgpn_above_pointing},
        {"vgpn_at_least_pointing", spec.expect.vgpn_at_least_pointing}};
      if (spec.expect.vgpn_rate) {
        e["vgpn_rate"] = *spec.expect.vgpn_rate;
      }
      if (spec.expect.pointing_below) {
        e["pointing_below"] = *spec.expect.pointing_below;
      }
      doc["expect"] = e;
      break;
    }
  }
  return doc;
}

ScenarioSpec load_spec(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::SpecInvalid, path + ": cannot open");
  }
  io::Json doc;
  try {
    doc = io::Json::parse(in);
  } catch (const nlohmann::json::exception & e) {
    throw Error(ErrorCode::SpecInvalid, path + ": " + e.what());
  }
  try {
    return spec_from_json(doc, std::filesystem::path(path).parent_path().string());
  } catch (const Error & e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

}  // namespace vgpn::harness
