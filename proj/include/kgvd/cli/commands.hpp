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

#ifndef KGVD_CLI_COMMANDS_HPP_
#define KGVD_CLI_COMMANDS_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kgvd/bisector/kds.hpp"
#include "kgvd/gvd/kds.hpp"
#include "kgvd/oracle/events.hpp"
#include "kgvd/scenarios/scenario.hpp"

namespace kgvd::cli {

struct Settings {
  uint64_t seed = 1;
  double eps_geom = 1e-9;  // relative to the polygon diameter
  double eps_time = 1e-9;
  int64_t event_budget = 1000000;
  KdsMode mode = KdsMode::kResponsive;  // two-site scenarios only
};

struct LogEntry {
  double t = 0;
  std::string kind;
  std::vector<std::string> sites;
  std::string detail = "{}";
};

// One line of the JSONL log, without the newline.
std::string to_jsonl(const LogEntry& e);

DomainPtr make_scenario_domain(const scenarios::Scenario& s,
                               const Settings& cfg);

// Drives the kinetic structure of a scenario. Two-site scenarios use the
// bisector KDS in the configured mode, larger ones the diagram KDS.
class Simulation {
 public:
  Simulation(const scenarios::Scenario& s, double horizon,
             const Settings& cfg);
  ~Simulation();

  bool two_site() const { return static_cast<bool>(bis_); }
  double now() const;
  double horizon() const { return horizon_; }
  // Next event without handling it; repeated calls return the same event.
  std::optional<LogEntry> peek();
  void handle();
  // Combinatorial state maintained by the KDS.
  std::string fingerprint() const;
  // Same, rebuilt from scratch at t.
  std::string rebuilt_fingerprint(double t) const;
  Diagram diagram_at(double t) const;
  const Domain& domain() const { return *dom_; }
  std::vector<Point> positions(double t) const;

 private:
  LogEntry entry(const DiagramEvent& e) const;
  LogEntry entry(const BisectorEvent& e) const;

  DomainPtr dom_;
  std::vector<Trajectory> traj_;
  std::vector<std::string> ids_;
  double horizon_;
  std::unique_ptr<DiagramKds> gvd_;
  std::unique_ptr<BisectorKds> bis_;
  std::optional<DiagramEvent> gvd_next_;
  std::optional<BisectorEvent> bis_next_;
};

// Maps library errors to CLI exit codes: 1 bad input, 2 degeneracy or a
// site leaving the polygon, 3 event budget.
int exit_code(const Error& e);

// Full event log up to the horizon.
std::vector<LogEntry> run_log(const scenarios::Scenario& s, double horizon,
                              const Settings& cfg);

struct VerifyPlan {
  oracle::SamplingPlan sampling;
  double match_tol = 1e-6;
  int check_times = 8;      // random times for labels, area and residuals
  int grid = 32;            // label grid per axis
  int residual_samples = 12;  // points per diagram edge
  int drop_event = -1;      // fault injection: skip this event's handler
};

struct EventCheck {
  LogEntry event;
  bool matched = false;
  double offset = 0;        // to the nearest oracle time
  bool rebuild_ok = true;   // maintained state equals a rebuild just after
};

struct VerifyReport {
  std::vector<EventCheck> events;
  std::vector<double> oracle_times;
  oracle::TimeMatch match;
  int rebuild_failures = 0;
  int soundness_checks = 0, soundness_failures = 0;
  int probes = 0, unambiguous = 0, agree = 0;
  double area_error = 0;  // relative
  double residual = 0;    // relative to the polygon diameter
  double seconds = 0;
  double agreement() const {
    return unambiguous == 0 ? 1.0 : static_cast<double>(agree) / unambiguous;
  }
  bool ok() const;
};

VerifyReport verify_scenario(const scenarios::Scenario& s,
                             const Settings& cfg, const VerifyPlan& plan);
void print_report(const VerifyReport& r, std::ostream& out);

struct CensusRow {
  std::string generator;
  int m = 0, n = 0;
  std::array<int64_t, kDiagramEventKinds> counts{};
  double seconds = 0;
};

std::string census_header();
std::string census_line(const CensusRow& row);
CensusRow census_row(const std::string& generator, int m, int n,
                     const Settings& cfg);

// Errors: InvalidArgument when t lies outside the scenario interval.
std::string snapshot_svg(const scenarios::Scenario& s, double t,
                         const Settings& cfg);

}  // namespace kgvd::cli

#endif  // KGVD_CLI_COMMANDS_HPP_
