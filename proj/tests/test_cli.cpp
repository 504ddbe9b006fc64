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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "doctest.h"
#include "kgvd/cli/commands.hpp"
#include "kgvd/scenarios/generators.hpp"
#include "kgvd/scenarios/shapes.hpp"

using namespace kgvd;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

std::string tmp(const std::string& name) {
  return std::string("/tmp/kgvd_test_cli_") + name;
}

// Runs the CLI with stdout captured; stderr is dropped.
Result cli_run(const std::string& args) {
  const std::string out = tmp("stdout");
  std::string cmd = std::string(KGVD_CLI) + " " + args + " > " + out + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::string path = tmp(name);
  std::ofstream(path) << text;
  return path;
}

const char* kStatic = R"({
  "polygon": [[0,0],[4,0],[4,4],[0,4]],
  "sites": [{"id": "a", "pos": [1,1], "vel": [0,0]},
            {"id": "b", "pos": [3,1], "vel": [0,0]},
            {"id": "c", "pos": [2,3], "vel": [0,0]}],
  "time": [0, 1]
})";

const char* kTwoSite = R"({
  "polygon": [[0,0],[4,0],[4,4],[0,4]],
  "sites": [{"id": "p", "pos": [1,2], "vel": [0,0]},
            {"id": "q", "pos": [3,2], "vel": [0,0]}],
  "time": [0, 1]
})";

}  // namespace

TEST_CASE("census header and empty grid") {
  Result r = cli_run("census --generator wineglass");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "generator,m,n,Collapse12,Expand12,Collapse13,Expand13,Collapse22,"
        "Expand22,Collapse23,Expand23,Collapse33,Expand33,Vertex\n");
}

TEST_CASE("census rows are deterministic and monotone for the wineglass") {
  Result a = cli_run("census --generator wineglass --m 2,4,8 --n 2");
  Result b = cli_run("census --generator wineglass --m 2,4,8 --n 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  int last = -1, rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
    REQUIRE(cols.size() == 14);
    int c22 = std::stoi(cols[7]);  // Collapse22
    CHECK(c22 > last);
    last = c22;
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("run: static scenario gives an empty log") {
  Result r = cli_run("run " + write_file("static.json", kStatic));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("run: missing file and bad horizon exit 1") {
  CHECK(cli_run("run /nonexistent/scenario.json").code == 1);
  CHECK(cli_run("run " + write_file("static2.json", kStatic) + " --horizon 2")
            .code == 1);
}

TEST_CASE("run: event budget exits 3") {
  Result r = cli_run("run --generator pit_spikes --m 4 --n 4 --event-budget 2");
  CHECK(r.code == 3);
}

TEST_CASE("run: JSONL log is well formed and byte-identical across runs") {
  Result a = cli_run("run --generator wineglass --m 4");
  Result b = cli_run("run --generator wineglass --m 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  int lines = 0;
  double last = 0;
  for (std::string line; std::getline(in, line); ++lines) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.size() == 4);
    CHECK(j["t"].get<double>() >= last);
    last = j["t"].get<double>();
    CHECK(j["kind"].is_string());
    CHECK(j["sites"] == nlohmann::json({"p", "q"}));
    CHECK(j["detail"].is_object());
  }
  CHECK(lines > 0);
}

TEST_CASE("run: log matches verify for the wineglass") {
  scenarios::Scenario s = scenarios::gen_wineglass(8);
  cli::VerifyPlan plan;
  plan.sampling.time_samples = 1000;
  cli::VerifyReport r = cli::verify_scenario(s, cli::Settings{}, plan);
  CHECK(r.ok());
  Result log = cli_run("run --generator wineglass --m 8");
  std::istringstream in(log.out);
  size_t i = 0;
  for (std::string line; std::getline(in, line); ++i) {
    REQUIRE(i < r.events.size());
    CHECK(cli::to_jsonl(r.events[i].event) == line);
  }
  CHECK(i == r.events.size());
}

TEST_CASE("modes give the same log up to root-finding noise in t") {
  Result a = cli_run("run --generator wineglass --m 4 --mode naive");
  Result b = cli_run("run --generator wineglass --m 4 --mode responsive");
  std::istringstream ia(a.out), ib(b.out);
  std::string la, lb;
  int lines = 0;
  while (std::getline(ia, la)) {
    REQUIRE(std::getline(ib, lb));
    auto ja = nlohmann::json::parse(la), jb = nlohmann::json::parse(lb);
    CHECK(std::fabs(ja["t"].get<double>() - jb["t"].get<double>()) < 1e-9);
    ja.erase("t");
    jb.erase("t");
    CHECK(ja == jb);
    ++lines;
  }
  CHECK(!std::getline(ib, lb));
  CHECK(lines > 0);
}

TEST_CASE("verify: passes on small scenarios, fails on an injected fault") {
  CHECK(cli_run("verify " + write_file("static3.json", kStatic)).code == 0);
  CHECK(cli_run("verify --generator center_swing --m 2").code == 0);
  CHECK(cli_run("verify --generator grid_sweep --m 2 --n 3").code == 0);
  CHECK(cli_run("verify --generator wineglass --m 2 --drop-event 2").code != 0);
}

TEST_CASE("snapshot") {
  Result r = cli_run("snapshot " + write_file("two.json", kTwoSite) + " --t 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") == 0);
  // one straight edge down x = 2
  CHECK(r.out.find("<polyline points=\"2,") != std::string::npos);
  size_t edges = 0;
  for (size_t at = r.out.find("<polyline"); at != std::string::npos;
       at = r.out.find("<polyline", at + 1))
    ++edges;
  CHECK(edges == 1);
  CHECK(cli_run("snapshot " + write_file("two2.json", kTwoSite) + " --t 3").code == 1);

  Result c = cli_run("snapshot " + write_file("three.json", kStatic) + " --t 0");
  CHECK(c.code == 0);
  CHECK(c.out.find("cx=\"2\" cy=\"-1.75\"") != std::string::npos);
}
