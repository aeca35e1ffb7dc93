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

#include "vgpn/harness/experiments.hpp"

#include "vgpn/error.hpp"
#include "vgpn/geometry/pointing.hpp"
#include "vgpn/geometry/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <thread>

namespace vgpn::harness
{

bool all_passed(const std::vector<Check> & checks)
{
  return std::all_of(checks.begin(), checks.end(), [](const Check & c) { return c.passed; });
}

const EfficiencyRow * EfficiencyReport::row(const std::string & label) const
{
  for (const auto & r : rows) {
    if (r.label == label) {
      return &r;
    }
  }
  return nullptr;
}

const SameDiffRow * SameDiffReport::row(pipeline::Mode mode) const
{
  for (const auto & r : rows) {
    if (r.mode == mode) {
      return &r;
    }
  }
  return nullptr;
}

namespace
{

std::string fmt(const char * format, double a, double b = 0.0)
{
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

// Runs body(worker, index) for every index, striding indices over workers.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t, std::size_t)> & body)
{
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      body(0, i);
    }
    return;
  }
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) {
          body(t, i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (const auto & e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

geometry::KeypointFrame pointing_frame(
  const world::Scene & scene, const Eigen::Vector2d & aim, double sigma, std::uint64_t seed)
{
  const auto frame = geometry::synthesize_frame(
    scene.user.position, scene.user.height, aim, geometry::Arm::Right, scene.camera.inverse(),
    scene.ground_height);
  return geometry::perturb_frame(frame, sigma, seed);
}

Eigen::Vector2d efficiency_aim(const ScenarioSpec & spec, const pipeline::World & world)
{
  const auto & scene = world.scene();
  if (spec.aim_point) {
    return *spec.aim_point;
  }
  if (spec.aim_object) {
    const auto * o = scene.find_object(*spec.aim_object);
    if (!o) {
      throw Error(ErrorCode::SpecInvalid, "aim.object: no object '" + *spec.aim_object + "' in the scene");
    }
    return o->position;
  }
  const auto understanding = world.language().understand(spec.command);
  const auto description = lang::object_description(understanding.instruction, world.language().lexicon());
  if (description) {
    const auto matches = world::match_objects(scene, description->category, description->properties);
    if (!matches.empty()) {
      return matches.front()->position;
    }
  }
  throw Error(ErrorCode::SpecInvalid, "aim: cannot infer an aim point from the command");
}

}  // namespace

EfficiencyReport run_efficiency(const ScenarioSpec & spec, std::shared_ptr<const pipeline::World> world)
{
  const auto & scene = world->scene();
  try {
    const auto understanding = world->language().understand(spec.command);
    if (lang::requires_gesture(understanding.instruction, scene, world->language().lexicon()).required) {
      throw Error(ErrorCode::SpecInvalid, "command: '" + spec.command + "' needs a gesture in this scene");
    }
  } catch (const Error & e) {
    if (e.code() == ErrorCode::SpecInvalid) {
      throw;
    }
    throw Error(ErrorCode::SpecInvalid, std::string("command: ") + e.what());
  }
  const Eigen::Vector2d aim = efficiency_aim(spec, *world);

  struct Variant
  {
    std::string label;
    pipeline::Mode mode;
    bool forced;
  };
  const std::vector<Variant> variants = {
    {"pointing-only", pipeline::Mode::PointingOnly, false},
    {"vgpn", pipeline::Mode::Vgpn, false},
    {"vgpn-forced", pipeline::Mode::Vgpn, true},
  };

  std::vector<geometry::KeypointFrame> frames;
  frames.reserve(spec.trials);
  for (std::size_t i = 0; i < spec.trials; ++i) {
    frames.push_back(pointing_frame(scene, aim, spec.keypoint_sigma, trial_seed(spec.seed, i)));
  }

  // Untimed warm-up.
  constexpr std::size_t kWarmupRounds = 200;
  pipeline::Session warm(world);
  for (std::size_t k = 0; k < kWarmupRounds; ++k) {
    for (const auto & v : variants) {
      pipeline::handle_command(warm, spec.command, frames[k % frames.size()], v.mode, {v.forced});
    }
  }

  std::vector<pipeline::Session> sessions;
  std::vector<std::vector<pipeline::TimingRecord>> records(variants.size());
  std::vector<std::size_t> failures(variants.size(), 0);
  for (std::size_t k = 0; k < variants.size(); ++k) {
    sessions.emplace_back(world);
  }
  // Variants interleaved, rotating order per trial.
  for (std::size_t i = 0; i < spec.trials; ++i) {
    for (std::size_t k = 0; k < variants.size(); ++k) {
      const std::size_t v = (i + k) % variants.size();
      std::vector<pipeline::TimingRecord> calls;
      calls.reserve(spec.repeats);
      bool failed = false;
      bool invoked = false;
      for (std::size_t r = 0; r < spec.repeats; ++r) {
        const auto outcome = pipeline::handle_command(
          sessions[v], spec.command, frames[i], variants[v].mode, {variants[v].forced});
        calls.push_back(outcome.timing);
        invoked = invoked || outcome.timing.phase2_invoked;
        failed = failed || !outcome.goal;
      }
      // Median-total call stands for the trial.
      const auto mid = calls.begin() + static_cast<std::ptrdiff_t>(calls.size() / 2);
      std::nth_element(calls.begin(), mid, calls.end(), [](const auto & a, const auto & b) {
        return a.total < b.total;
      });
      pipeline::TimingRecord record = *mid;
      record.phase2_invoked = invoked;
      records[v].push_back(record);
      if (failed) {
        ++failures[v];
      }
    }
  }

  EfficiencyReport report;
  for (std::size_t k = 0; k < variants.size(); ++k) {
    report.rows.push_back(
      {variants[k].label, pipeline::timing_summary(records[k]), sessions[k].phase2_invocations(), failures[k]});
  }
  const auto & skip = *report.row("vgpn");
  const auto & forced = *report.row("vgpn-forced");
  const auto & pointing = *report.row("pointing-only");
  report.checks.push_back(
    {"vgpn phase-2 invocations = 0", skip.phase2_invocations == 0,
     std::to_string(skip.phase2_invocations) + " invocations"});
  report.checks.push_back(
    {"vgpn t2 mean = 0 and SD = 0", skip.summary.t2.mean == 0.0 && skip.summary.t2.sd == 0.0,
     fmt("mean %.6g us, SD %.6g us", skip.summary.t2.mean, skip.summary.t2.sd)});
  report.checks.push_back(
    {"pointing-only t1 = 0", pointing.summary.t1.mean == 0.0 && pointing.summary.t1.sd == 0.0,
     fmt("mean %.6g us, SD %.6g us", pointing.summary.t1.mean, pointing.summary.t1.sd)});
  report.checks.push_back(
    {"vgpn reaches a goal in every trial", skip.failures == 0, std::to_string(skip.failures) + " failures"});
  if (spec.expect.skip_faster) {
    report.checks.push_back(
      {"vgpn mean total < vgpn-forced mean total", skip.summary.total.mean < forced.summary.total.mean,
       fmt("%.3f us vs %.3f us", skip.summary.total.mean, forced.summary.total.mean)});
  }
  return report;
}

std::vector<Eigen::Vector2d> default_accuracy_targets(const ScenarioSpec & spec, const world::Scene & scene)
{
  const double edges[4] = {1.0, spec.bins.near_max, spec.bins.middle_max, spec.bins.far_max};
  std::vector<Eigen::Vector2d> out;
  int index = 0;
  for (std::size_t b = 0; b < 3; ++b) {
    const int k = spec.targets_per_bin[b];
    for (int j = 0; j < k; ++j, ++index) {
      const double d = edges[b] + (edges[b + 1] - edges[b]) * (j + 1) / k;
      // Fan the targets out around +x so they do not line up.
      const double angle = (index % 2 == 0 ? 1.0 : -1.0) * 0.35 * ((index + 1) / 2);
      out.push_back(scene.user.position + d * Eigen::Vector2d(std::cos(angle), std::sin(angle)));
    }
  }
  return out;
}

AccuracyReport run_accuracy(const ScenarioSpec & spec, std::shared_ptr<const pipeline::World> world)
{
  const auto & scene = world->scene();
  const auto targets = spec.targets.empty() ? default_accuracy_targets(spec, scene) : spec.targets;
  if (targets.empty()) {
    throw Error(ErrorCode::SpecInvalid, "targets: none");
  }

  AccuracyReport report;
  report.bins = {{"near", {}, 0, 0, {}, {}, {}}, {"middle", {}, 0, 0, {}, {}, {}}, {"far", {}, 0, 0, {}, {}, {}}};
  std::vector<std::size_t> bin_of;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const double d = (targets[j] - scene.user.position).norm();
    std::size_t b = 0;
    if (d > spec.bins.far_max) {
      throw Error(ErrorCode::SpecInvalid, "targets[" + std::to_string(j) + "]: beyond the far bin");
    } else if (d > spec.bins.middle_max) {
      b = 2;
    } else if (d > spec.bins.near_max) {
      b = 1;
    }
    bin_of.push_back(b);
    report.bins[b].targets.push_back(targets[j]);
  }

  struct Sample
  {
    bool ok = false;
    Eigen::Vector2d delta = Eigen::Vector2d::Zero();
  };
  const std::size_t n = spec.trials * targets.size();
  std::vector<Sample> samples(n);
  const Eigen::Vector3d vertical = geometry::vertical_in_camera(scene.camera);
  parallel_for(n, spec.threads, [&](std::size_t, std::size_t i) {
    const std::size_t j = i % targets.size();
    try {
      const auto frame = pointing_frame(scene, targets[j], spec.keypoint_sigma, trial_seed(spec.seed, i));
      const auto arm = geometry::select_arm(frame, vertical);
      const auto hit = geometry::ground_intersection(geometry::pointing_ray(frame, arm, scene.camera), scene.ground_height);
      samples[i] = {true, hit.head<2>() - targets[j]};
    } catch (const Error &) {
      samples[i] = {};
    }
  });

  std::vector<std::vector<double>> dx(3), dy(3), dist(3);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t b = bin_of[i % targets.size()];
    ++report.bins[b].samples;
    if (!samples[i].ok) {
      ++report.bins[b].failures;
      continue;
    }
    dx[b].push_back(std::abs(samples[i].delta.x()));
    dy[b].push_back(std::abs(samples[i].delta.y()));
    dist[b].push_back(samples[i].delta.norm());
    worst = std::max(worst, dist[b].back());
  }
  std::vector<AccuracyBin> kept;
  for (std::size_t b = 0; b < 3; ++b) {
    if (dist[b].empty()) {
      continue;
    }
    auto & bin = report.bins[b];
    bin.dx = pipeline::field_stats(dx[b]);
    bin.dy = pipeline::field_stats(dy[b]);
    bin.distance = pipeline::field_stats(dist[b]);
    kept.push_back(bin);
  }
  report.bins = kept;

  std::size_t failures = 0;
  for (const auto & b : report.bins) {
    failures += b.failures;
  }
  report.checks.push_back({"every sample intersects the ground", failures == 0, std::to_string(failures) + " failures"});
  if (spec.expect.ordered) {
    bool ordered = report.bins.size() == 3;
    std::string detail;
    for (std::size_t b = 0; b < report.bins.size(); ++b) {
      detail += (b ? " < " : "") + fmt("%.6f", report.bins[b].distance.mean);
      if (b > 0 && !(report.bins[b - 1].distance.mean < report.bins[b].distance.mean)) {
        ordered = false;
      }
    }
    report.checks.push_back({"mean offset near < middle < far", ordered, detail + " m"});
  }
  if (spec.expect.max_offset) {
    report.checks.push_back(
      {"every offset < " + fmt("%g", *spec.expect.max_offset) + " m", worst < *spec.expect.max_offset,
       fmt("max %.3g m", worst)});
  }
  return report;
}

SameDiffReport run_same_diff(const ScenarioSpec & spec, std::shared_ptr<const pipeline::World> world)
{
  const auto & scene = world->scene();
  const auto * intended = scene.find_object(spec.intended);
  const auto * distractor = scene.find_object(spec.distractor);
  if (!intended) {
    throw Error(ErrorCode::SpecInvalid, "intended: no object '" + spec.intended + "' in the scene");
  }
  if (!distractor) {
    throw Error(ErrorCode::SpecInvalid, "distractor: no object '" + spec.distractor + "' in the scene");
  }

  // Nearest object to a point; ties go to the smaller id.
  auto nearest_object = [&](const Eigen::Vector2d & p) {
    const world::SceneObject * best = nullptr;
    double best_d = 0.0;
    for (const auto & o : scene.objects) {
      const double d = (o.position - p).norm();
      if (!best || d < best_d || (d == best_d && o.id < best->id)) {
        best = &o;
        best_d = d;
      }
    }
    return best;
  };

  const std::size_t modes = spec.modes.size();
  std::vector<std::vector<char>> success(modes, std::vector<char>(spec.trials, 0));
  std::vector<std::vector<char>> failed(modes, std::vector<char>(spec.trials, 0));
  const std::size_t threads = std::max<std::size_t>(1, std::min(spec.threads, spec.trials));
  std::vector<std::vector<pipeline::Session>> sessions(threads);
  for (auto & per_thread : sessions) {
    for (std::size_t m = 0; m < modes; ++m) {
      per_thread.emplace_back(world);
    }
  }

  parallel_for(spec.trials, threads, [&](std::size_t worker, std::size_t i) {
    const std::uint64_t seed = trial_seed(spec.seed, i);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, spec.aim_sigma);
    Eigen::Vector2d aim = distractor->position;
    if (spec.aim_sigma > 0.0) {
      const double ax = noise(rng);
      const double ay = noise(rng);
      aim += Eigen::Vector2d(ax, ay);
    }
    std::optional<geometry::KeypointFrame> frame;
    try {
      frame = pointing_frame(scene, aim, spec.keypoint_sigma, trial_seed(seed, 1));
    } catch (const Error &) {
      frame.reset();
    }
    for (std::size_t m = 0; m < modes; ++m) {
      const auto outcome = pipeline::handle_command(sessions[worker][m], spec.command, frame, spec.modes[m]);
      if (!outcome.goal) {
        failed[m][i] = 1;
        continue;
      }
      if (spec.modes[m] == pipeline::Mode::Vgpn) {
        success[m][i] = outcome.goal->matched_object_id == spec.intended;
      } else {
        success[m][i] = nearest_object(outcome.goal->position) == intended;
      }
    }
  });

  SameDiffReport report;
  for (std::size_t m = 0; m < modes; ++m) {
    SameDiffRow row;
    row.mode = spec.modes[m];
    row.trials = spec.trials;
    row.successes = static_cast<std::size_t>(std::count(success[m].begin(), success[m].end(), 1));
    row.failures = static_cast<std::size_t>(std::count(failed[m].begin(), failed[m].end(), 1));
    row.rate = static_cast<double>(row.successes) / static_cast<double>(row.trials);
    report.rows.push_back(row);
  }

  const auto * vgpn = report.row(pipeline::Mode::Vgpn);
  const auto * pointing = report.row(pipeline::Mode::PointingOnly);
  if (vgpn && spec.expect.vgpn_rate) {
    report.checks.push_back(
      {"vgpn success rate = " + fmt("%g", *spec.expect.vgpn_rate), vgpn->rate == *spec.expect.vgpn_rate,
       fmt("%.4f", vgpn->rate)});
  }
  if (pointing && spec.expect.pointing_below) {
    report.checks.push_back(
      {"pointing-only success rate < " + fmt("%g", *spec.expect.pointing_below),
       pointing->rate < *spec.expect.pointing_below, fmt("%.4f", pointing->rate)});
  }
  if (vgpn && pointing && spec.expect.vgpn_at_least_pointing) {
    report.checks.push_back(
      {"vgpn success rate >= pointing-only", vgpn->rate >= pointing->rate,
       fmt("%.4f vs %.4f", vgpn->rate, pointing->rate)});
  }
  if (vgpn && pointing && spec.expect.vgpn_above_pointing) {
    report.checks.push_back(
      {"vgpn success rate > pointing-only", vgpn->rate > pointing->rate,
       fmt("%.4f vs %.4f", vgpn->rate, pointing->rate)});
  }
  return report;
}

}  // namespace vgpn::harness
