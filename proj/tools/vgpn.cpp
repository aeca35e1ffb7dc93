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

#include "vgpn/error.hpp"
#include "vgpn/harness/experiments.hpp"
#include "vgpn/harness/report.hpp"
#include "vgpn/harness/scenario.hpp"
#include "vgpn/io/json_io.hpp"
#include "vgpn/lang/language.hpp"
#include "vgpn/pipeline/pipeline.hpp"
#include "vgpn/service/http_server.hpp"
#include "vgpn/service/session_manager.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

namespace
{

using namespace vgpn;

// Exit codes: 0 ok, 1 a check failed, 2 bad input.
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

service::HttpServer * g_server = nullptr;

void on_signal(int)
{
  if (g_server) {
    g_server->stop();
  }
}

std::shared_ptr<const lang::Language> language_from(const std::string & dir)
{
  if (dir.empty()) {
    return nullptr;
  }
  return std::make_shared<const lang::Language>(lang::Language::load_directory(dir));
}

int finish(const harness::Report & report, const std::string & out_dir)
{
  std::cout << report.text;
  if (!out_dir.empty()) {
    for (const auto & path : harness::write_report(report, out_dir)) {
      std::cout << "wrote " << path << "\n";
    }
  }
  return report.passed() ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Voice-guided pointing navigation: parser, simulator, experiments and service"};
  app.require_subcommand(1);

  // parse
  auto * parse = app.add_subcommand("parse", "Show tokens, dependency tree, canonical string and instruction");
  std::string parse_text;
  std::string data_dir;
  bool parse_json = false;
  parse->add_option("command", parse_text, "Command text")->required();
  parse->add_option("--data-dir", data_dir, "Directory with lexicon.tsv, grammar.txt, templates.txt");
  parse->add_flag("--json", parse_json, "Print JSON instead of text");

  // command
  auto * command = app.add_subcommand("command", "Run one command through the pipeline on a scene");
  std::string command_text;
  std::string command_scene;
  std::vector<double> command_aim;
  std::string command_frame;
  std::string command_mode = "vgpn";
  command->add_option("text", command_text, "Command text")->required();
  command->add_option("--scene", command_scene, "Scene file")->required();
  command->add_option("--aim", command_aim, "Ground point the user points at")->expected(2);
  command->add_option("--frame", command_frame, "Keypoint frame JSON file");
  command->add_option("--mode", command_mode, "vgpn or pointing-only");
  command->add_option("--data-dir", data_dir, "Language resource directory");

  // run
  auto * run = app.add_subcommand("run", "Run a scenario file");
  std::string scenario_path;
  std::string out_dir;
  std::optional<std::size_t> run_threads;
  run->add_option("scenario", scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Directory for CSV, text and JSON reports");
  run->add_option("--threads", run_threads, "Worker threads");

  // bench
  auto * bench = app.add_subcommand("bench", "Run an experiment from command-line parameters");
  std::string experiment;
  harness::ScenarioSpec bench_spec;
  bench->add_option("experiment", experiment, "efficiency, accuracy or samediff")
    ->required()
    ->check(CLI::IsMember({"efficiency", "accuracy", "samediff"}));
  bench->add_option("--scene", bench_spec.scene_path, "Scene file")->required()->check(CLI::ExistingFile);
  bench->add_option("--trials", bench_spec.trials, "Number of trials")->check(CLI::PositiveNumber);
  bench->add_option("--repeats", bench_spec.repeats, "Efficiency: calls per trial (median-total call kept)")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_spec.seed, "RNG seed");
  bench->add_option("--sigma", bench_spec.keypoint_sigma, "Keypoint noise sigma, meters")->check(CLI::NonNegativeNumber);
  bench->add_option("--out", out_dir, "Directory for CSV, text and JSON reports");
  bench->add_option("--command", bench_spec.command, "Command text");
  bench->add_option("--intended", bench_spec.intended, "samediff: intended object id");
  bench->add_option("--distractor", bench_spec.distractor, "samediff: distractor object id");
  bench->add_option("--aim-sigma", bench_spec.aim_sigma, "samediff: aim spread around the distractor")
    ->check(CLI::NonNegativeNumber);
  bench->add_option("--threads", bench_spec.threads, "Worker threads")->check(CLI::PositiveNumber);

  // serve
  auto * serve = app.add_subcommand("serve", "Start the HTTP session service");
  std::string host = "127.0.0.1";
  int port = 8080;
  bool manual_clock = false;
  double dt = 0.1;
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--host", host, "Bind address");
  serve->add_flag("--manual-clock", manual_clock, "Advance sessions only through /step");
  serve->add_option("--dt", dt, "Simulated seconds per tick")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse) {
      const auto language = language_from(data_dir);
      const auto & lang = language ? *language : lang::Language::builtin();
      const auto understanding = lang.understand(parse_text);
      if (parse_json) {
        std::cout << io::to_json(understanding).dump(2) << "\n";
      } else {
        std::cout << lang::describe(understanding);
      }
      return 0;
    }

    if (*command) {
      auto world = std::make_shared<const pipeline::World>(io::load_scene(command_scene), language_from(data_dir));
      pipeline::Session session(world);
      std::optional<geometry::KeypointFrame> frame;
      if (!command_frame.empty()) {
        std::ifstream in(command_frame);
        if (!in) {
          throw Error(ErrorCode::InvalidFrame, command_frame + ": cannot open");
        }
        frame = io::frame_from_json(io::Json::parse(in));
      } else if (command_aim.size() == 2) {
        frame = service::frame_for_aim(world->scene(), {command_aim[0], command_aim[1]});
      }
      const auto outcome =
        pipeline::handle_command(session, command_text, frame, pipeline::mode_from_string(command_mode));
      std::cout << io::to_json(outcome).dump(2) << "\n";
      return outcome.goal ? 0 : kCheckFailed;
    }

    if (*run) {
      auto spec = harness::load_spec(scenario_path);
      if (run_threads) {
        spec.threads = *run_threads;
      }
      return finish(harness::run_scenario(spec), out_dir);
    }

    if (*bench) {
      bench_spec.name = experiment;
      if (experiment == "efficiency") {
        bench_spec.experiment = harness::Experiment::Efficiency;
        bench_spec.expect.skip_faster = true;
        if (bench_spec.command.empty()) {
          bench_spec.command = "go to that door";
        }
      } else if (experiment == "accuracy") {
        bench_spec.experiment = harness::Experiment::Accuracy;
      } else {
        bench_spec.experiment = harness::Experiment::SameDiff;
        if (bench_spec.command.empty()) {
          bench_spec.command = "go to that chair";
        }
        if (bench_spec.intended.empty() || bench_spec.distractor.empty()) {
          throw Error(ErrorCode::SpecInvalid, "samediff needs --intended and --distractor");
        }
      }
      // Round-trip through the JSON form so the same validation applies.
      const auto spec = harness::spec_from_json(harness::spec_to_json(bench_spec));
      return finish(harness::run_scenario(spec), out_dir);
    }

    if (*serve) {
      service::SessionManager manager({manual_clock ? service::ClockMode::Manual : service::ClockMode::Realtime, dt});
      service::HttpServer server(manager);
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cout << "listening on http://" << host << ":" << port << std::endl;
      if (!server.listen(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return kBadInput;
      }
      return 0;
    }
  } catch (const Error & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return 0;
}
