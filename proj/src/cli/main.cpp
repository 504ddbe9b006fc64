// Copyright 2026 The kgvd Authors.
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

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgvd/cli/commands.hpp"
#include "kgvd/geom/error.hpp"
#include "kgvd/scenarios/generators.hpp"

namespace {

using kgvd::cli::Settings;
using kgvd::scenarios::Scenario;

// Output file, or stdout when the path is empty or "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_)
      throw kgvd::Error(kgvd::ErrorKind::kInvalidArgument,
                        "cannot write " + path);
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Source {
  std::string path, generator;
  int m = 0, n = 0;
  Scenario load(const Settings& cfg) const {
    if (!generator.empty())
      return kgvd::scenarios::generate(generator, m, n, cfg.seed);
    if (path.empty())
      throw kgvd::Error(kgvd::ErrorKind::kInvalidArgument,
                        "need a scenario file or --generator");
    return kgvd::scenarios::load_scenario_file(path);
  }
};

void add_source(CLI::App* cmd, Source* src) {
  cmd->add_option("scenario", src->path, "Scenario JSON file");
  cmd->add_option("--generator", src->generator,
                  "Use a generated scenario instead of a file");
  cmd->add_option("--m", src->m, "Generator size m");
  cmd->add_option("--n", src->n, "Generator site count n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinetic geodesic Voronoi diagrams of moving sites in a polygon"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings cfg;
  std::string mode = "responsive";
  app.add_option("--seed", cfg.seed, "Seed for generators and sampling")
      ->capture_default_str();
  app.add_option("--eps-geom", cfg.eps_geom,
                 "Geometric tolerance, relative to the polygon diameter")
      ->capture_default_str();
  app.add_option("--eps-time", cfg.eps_time, "Oracle time resolution")
      ->capture_default_str();
  app.add_option("--event-budget", cfg.event_budget,
                 "Abort after this many events (exit 3)")
      ->capture_default_str();
  app.add_option("--mode", mode, "Bisector KDS used for two-site scenarios")
      ->check(CLI::IsMember({"naive", "responsive"}))
      ->capture_default_str();

  // run
  Source run_src;
  double horizon = -1;
  std::string run_out;
  CLI::App* run = app.add_subcommand("run", "Write the JSONL event log");
  add_source(run, &run_src);
  run->add_option("--horizon", horizon, "Stop time (default: scenario t1)");
  run->add_option("--out", run_out, "Log file (default: stdout)");

  // verify
  Source ver_src;
  kgvd::cli::VerifyPlan plan;
  plan.sampling.time_samples = 1000;
  CLI::App* verify =
      app.add_subcommand("verify", "Check the KDS against the sampling oracle");
  add_source(verify, &ver_src);
  verify->add_option("--time-samples", plan.sampling.time_samples,
                     "Coarse oracle samples")
      ->capture_default_str();
  verify->add_option("--grid", plan.grid, "Label grid resolution per axis")
      ->capture_default_str();
  verify->add_option("--check-times", plan.check_times,
                     "Random times for label, area and residual checks")
      ->capture_default_str();
  verify->add_option("--drop-event", plan.drop_event,
                     "Fault injection: leave event k out of the log");

  // census
  std::vector<std::string> gens;
  std::vector<int> ms, ns;
  std::string census_out;
  CLI::App* census = app.add_subcommand("census", "Event counts as CSV");
  census->add_option("--generator", gens, "Generator names")
      ->delimiter(',')
      ->required();
  census->add_option("--m", ms, "Sizes m")->delimiter(',');
  census->add_option("--n", ns, "Site counts n (default: n = m)")
      ->delimiter(',');
  census->add_option("--out", census_out, "CSV file (default: stdout)");

  // snapshot
  Source snap_src;
  double snap_t = 0;
  std::string snap_out;
  CLI::App* snap = app.add_subcommand("snapshot", "Draw the diagram as SVG");
  add_source(snap, &snap_src);
  snap->add_option("--t", snap_t, "Time")->required();
  snap->add_option("--out", snap_out, "SVG file (default: stdout)");

  // generate
  std::string gen_name, gen_out;
  int gen_m = 0, gen_n = 0;
  CLI::App* gen = app.add_subcommand("generate", "Write a generated scenario");
  gen->add_option("name", gen_name, "Generator name")->required();
  gen->add_option("--m", gen_m, "Size m")->required();
  gen->add_option("--n", gen_n, "Site count n");
  gen->add_option("--out", gen_out, "Scenario file (default: stdout)");

  CLI11_PARSE(app, argc, argv);
  cfg.mode = mode == "naive" ? kgvd::KdsMode::kNaive
                             : kgvd::KdsMode::kResponsive;

  try {
    if (*run) {
      Scenario s = run_src.load(cfg);
      Sink sink(run_out);
      kgvd::cli::Simulation sim(s, horizon < 0 ? s.t1 : horizon, cfg);
      while (auto e = sim.peek()) {
        sink.get() << kgvd::cli::to_jsonl(*e) << '\n';
        sim.handle();
      }
      sink.get().flush();
      return 0;
    }
    if (*verify) {
      Scenario s = ver_src.load(cfg);
      kgvd::cli::VerifyReport r = kgvd::cli::verify_scenario(s, cfg, plan);
      kgvd::cli::print_report(r, std::cout);
      return r.ok() ? 0 : 4;
    }
    if (*census) {
      Sink sink(census_out);
      sink.get() << kgvd::cli::census_header() << '\n';
      for (const std::string& g : gens) {
        for (int m : ms) {
          std::vector<int> sizes = ns.empty() ? std::vector<int>{m} : ns;
          for (int n : sizes) {
            kgvd::cli::CensusRow row = kgvd::cli::census_row(g, m, n, cfg);
            sink.get() << kgvd::cli::census_line(row) << '\n';
            std::cerr << g << " m=" << m << " n=" << n << " "
                      << row.seconds << " s\n";
          }
        }
      }
      return 0;
    }
    if (*snap) {
      Scenario s = snap_src.load(cfg);
      std::string svg = kgvd::cli::snapshot_svg(s, snap_t, cfg);
      Sink sink(snap_out);
      sink.get() << svg;
      return 0;
    }
    if (*gen) {
      Scenario s = kgvd::scenarios::generate(gen_name, gen_m,
                                             gen_n > 0 ? gen_n : gen_m, cfg.seed);
      Sink sink(gen_out);
      sink.get() << kgvd::scenarios::save_scenario(s);
      return 0;
    }
  } catch (const kgvd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kgvd::cli::exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
