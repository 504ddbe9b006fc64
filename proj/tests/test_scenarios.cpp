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

#include <string>

#include "doctest.h"
#include "kgvd/cli/commands.hpp"
#include "kgvd/geom/error.hpp"
#include "kgvd/scenarios/generators.hpp"
#include "kgvd/scenarios/scenario.hpp"

using namespace kgvd;
using scenarios::Scenario;

namespace {

// Sum of the counts for the given kinds over a full run.
int count_kinds(const Scenario& s, std::initializer_list<const char*> kinds) {
  int c = 0;
  for (const cli::LogEntry& e : cli::run_log(s, s.t1, cli::Settings{}))
    for (const char* k : kinds) c += e.kind == k;
  return c;
}

}  // namespace

TEST_CASE("hand-written square file parses and round-trips") {
  const std::string text = R"({
    "polygon": [[0,0],[4,0],[4,4],[0,4]],
    "sites": [{"id": "p", "pos": [1,2], "vel": [0,0]},
              {"id": "q", "pos": [3,2], "vel": [0,0.5]}],
    "time": [0, 1]
  })";
  Scenario s = scenarios::load_scenario(text);
  CHECK(s.n() == 2);
  CHECK(s.sites[1].id == "q");
  CHECK(s.sites[1].vel.y == 0.5);
  std::string bytes = scenarios::save_scenario(s);
  CHECK(scenarios::save_scenario(scenarios::load_scenario(bytes)) == bytes);
}

TEST_CASE("schema errors name the offending path") {
  const std::string bad = R"({
    "polygon": [[0,0],[4,0],[4,4],[0,4]],
    "sites": [{"id": "p", "pos": [1,2], "vel": [0,0], "mass": 3}],
    "time": [0, 1]
  })";
  try {
    scenarios::load_scenario(bad);
    FAIL("accepted an unknown key");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSchema);
    CHECK(std::string(e.what()).find("sites[0].mass") != std::string::npos);
  }
  CHECK_THROWS_AS(scenarios::load_scenario("{\"polygon\": 3}"), Error);
}

TEST_CASE("generators reject sizes below their minimum") {
  CHECK_THROWS_AS(scenarios::gen_wineglass(1), Error);
  CHECK_THROWS_AS(scenarios::gen_pit_spikes(2, 2), Error);
  CHECK_THROWS_AS(scenarios::generate("no_such_generator", 2, 2), Error);
}

TEST_CASE("generated scenarios validate and round-trip") {
  for (const std::string& g : scenarios::generator_names()) {
    for (int k : {2, 4, 8}) {
      Scenario s = scenarios::generate(g, k, std::max(k, 4));
      CHECK_NOTHROW(scenarios::validate_scenario(s));
      std::string bytes = scenarios::save_scenario(s);
      CHECK(scenarios::save_scenario(scenarios::load_scenario(bytes)) == bytes);
    }
  }
  Scenario r = scenarios::random_scenario(16, 4, 9);
  CHECK(r.n() == 4);
  CHECK(scenarios::save_scenario(scenarios::random_scenario(16, 4, 9)) ==
        scenarios::save_scenario(r));
}

TEST_CASE("wineglass 2,2 events grow with the chain length") {
  int c2 = count_kinds(scenarios::gen_wineglass(2), {"Collapse22", "Expand22"});
  int c4 = count_kinds(scenarios::gen_wineglass(4), {"Collapse22", "Expand22"});
  int c8 = count_kinds(scenarios::gen_wineglass(8), {"Collapse22", "Expand22"});
  CHECK(c2 >= 1);
  CHECK(c4 > c2);
  CHECK(c8 > c4);
}

TEST_CASE("pit with T-shapes: vertex and 1,2 events grow in m and n") {
  auto count = [](int m, int n) {
    return count_kinds(scenarios::gen_pit_tshapes(m, n),
                       {"Vertex", "Collapse12", "Expand12"});
  };
  CHECK(count(2, 2) < count(4, 2));
  CHECK(count(4, 2) < count(8, 2));
  CHECK(count(2, 2) < count(2, 4));
  CHECK(count(4, 2) < count(4, 4));
}

TEST_CASE("grid sweep: 2,3 events grow in m and n") {
  auto count = [](int m, int n) {
    return count_kinds(scenarios::gen_grid_sweep(m, n),
                       {"Collapse23", "Expand23"});
  };
  CHECK(count(2, 4) < count(8, 4));
  CHECK(count(4, 4) < count(4, 8));
}

TEST_CASE("spiked pit produces 1,3 events, the floor variant 3,3 events") {
  CHECK(count_kinds(scenarios::gen_pit_spikes(4, 3),
                    {"Collapse13", "Expand13"}) >= 2);
  CHECK(count_kinds(scenarios::gen_pit_spikes(4, 4, true),
                    {"Collapse33", "Expand33"}) >= 2);
}
