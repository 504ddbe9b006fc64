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

#include "kgvd/scenarios/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kgvd/geom/error.hpp"

namespace kgvd::scenarios {

using nlohmann::json;

std::vector<Trajectory> Scenario::trajectories() const {
  std::vector<Trajectory> out;
  for (int i = 0; i < n(); ++i) out.push_back(trajectory(i));
  return out;
}

std::vector<std::string> Scenario::ids() const {
  std::vector<std::string> out;
  for (const auto& s : sites) out.push_back(s.id);
  return out;
}

static double path_clearance(const Polygon& poly, const Point& a,
                             const Point& b) {
  double best = 1e300;
  for (int e = 0; e < poly.size(); ++e) {
    const Point& c = poly[e];
    const Point& d = poly[poly.next(e)];
    if (segments_intersect(a, b, c, d)) return 0;
    best = std::min({best, point_segment_distance(a, c, d),
                     point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b),
                     point_segment_distance(d, a, b)});
  }
  return best;
}

void validate_scenario(const Scenario& s) {
  if (!(s.t0 < s.t1) || !std::isfinite(s.t0) || !std::isfinite(s.t1))
    throw Error(ErrorKind::kInvalidArgument, "time range must satisfy t0 < t1");
  if (s.sites.empty())
    throw Error(ErrorKind::kInvalidArgument, "scenario has no sites");
  const Polygon& poly = s.polygon;
  const double tol = 1e-9 * poly.diameter();
  std::set<std::string> seen;
  for (int i = 0; i < s.n(); ++i) {
    const SiteSpec& site = s.sites[i];
    if (!seen.insert(site.id).second)
      throw Error(ErrorKind::kInvalidArgument, "duplicate site id " + site.id);
    if (!site.pos.finite() || !site.vel.finite())
      throw Error(ErrorKind::kInvalidArgument, "non-finite site " + site.id);
    Point a = s.trajectory(i).at(s.t0), b = s.trajectory(i).at(s.t1);
    if (!poly.strictly_inside(a, tol))
      throw Error(ErrorKind::kSiteOnBoundary,
                  "site " + site.id + " not strictly inside at t0");
    if (!poly.strictly_inside(b, tol) || path_clearance(poly, a, b) <= tol)
      throw Error(ErrorKind::kSiteExitsPolygon,
                  "site " + site.id + " leaves the polygon before t1");
    for (int j = 0; j < i; ++j)
      if (dist(a, s.trajectory(j).at(s.t0)) <= tol)
        throw Error(ErrorKind::kInvalidArgument,
                    "sites " + s.sites[j].id + " and " + site.id +
                        " coincide at t0");
  }
}

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::kSchema, path + ": " + msg);
}

void only_keys(const json& j, const std::string& path,
               std::initializer_list<const char*> keys) {
  if (!j.is_object()) schema(path, "expected object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok = ok || it.key() == k;
    if (!ok) schema(path + "." + it.key(), "unknown key");
  }
  for (const char* k : keys)
    if (!j.contains(k)) schema(path + "." + k, "missing key");
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) schema(path, "expected number");
  double v = j.get<double>();
  if (!std::isfinite(v)) schema(path, "non-finite number");
  return v;
}

Point pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema(path, "expected [x, y]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

}  // namespace

Scenario load_scenario(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    schema("$", std::string("malformed JSON: ") + e.what());
  }
  only_keys(j, "$", {"polygon", "sites", "time"});
  Scenario s;
  const json& poly = j["polygon"];
  if (!poly.is_array() || poly.size() < 3)
    schema("$.polygon", "expected at least 3 points");
  std::vector<Point> ring;
  for (size_t i = 0; i < poly.size(); ++i)
    ring.push_back(pair(poly[i], "$.polygon[" + std::to_string(i) + "]"));
  try {
    s.polygon = Polygon(ring);
  } catch (const Error& e) {
    schema("$.polygon", e.what());
  }
  const json& sites = j["sites"];
  if (!sites.is_array()) schema("$.sites", "expected array");
  for (size_t i = 0; i < sites.size(); ++i) {
    std::string path = "$.sites[" + std::to_string(i) + "]";
    only_keys(sites[i], path, {"id", "pos", "vel"});
    if (!sites[i]["id"].is_string()) schema(path + ".id", "expected string");
    SiteSpec site;
    site.id = sites[i]["id"].get<std::string>();
    site.pos = pair(sites[i]["pos"], path + ".pos");
    site.vel = pair(sites[i]["vel"], path + ".vel");
    s.sites.push_back(site);
  }
  const json& time = j["time"];
  if (!time.is_array() || time.size() != 2) schema("$.time", "expected [t0, t1]");
  s.t0 = number(time[0], "$.time[0]");
  s.t1 = number(time[1], "$.time[1]");
  if (!(s.t0 < s.t1)) schema("$.time", "t0 must be below t1");
  return s;
}

std::string save_scenario(const Scenario& s) {
  json j;
  j["polygon"] = json::array();
  for (const Point& p : s.polygon.vertices())
    j["polygon"].push_back({p.x, p.y});
  j["sites"] = json::array();
  for (const SiteSpec& site : s.sites)
    j["sites"].push_back(
        {{"id", site.id}, {"pos", {site.pos.x, site.pos.y}},
         {"vel", {site.vel.x, site.vel.y}}});
  j["time"] = {s.t0, s.t1};
  return j.dump() + "\n";
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_scenario(ss.str());
}

}  // namespace kgvd::scenarios
