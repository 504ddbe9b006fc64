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

#include "kgvd/scenarios/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kgvd/geom/error.hpp"
#include "kgvd/scenarios/shapes.hpp"

namespace kgvd::scenarios {

namespace {

double rad(double deg) { return deg * M_PI / 180.0; }

void need(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
}

// Small deterministic offsets that keep sites off symmetry lines.
double jit(int i, double amp) {
  double f = std::fmod(0.6180339887498949 * (i + 1) + 0.137, 1.0);
  return amp * (f - 0.5);
}

std::string sid(const char* tag, int i) { return tag + std::to_string(i); }

}  // namespace

Scenario gen_center_swing(int m_chain) {
  need(m_chain >= 2, "gen_center_swing needs m_chain >= 2");
  const int k = m_chain;
  // Bump of radius r on the right wall; its upper arc carries the chain.
  const double r = 3, bx = 12, by = 5;
  const double lo = 0.45, hi = 0.97;  // fraction of the half turn covered
  std::vector<Point> v = {{-20, 0}, {bx, 0}, {bx, by - r - 1}};
  for (int i = 0; i < k; ++i) {
    double f = lo + (hi - lo) * i / (k - 1);
    double th = rad(-90 - 180 * f);
    v.push_back({bx + r * std::cos(th), by + r * std::sin(th)});
  }
  v.push_back({bx, by + r});
  v.push_back({bx, 12});
  v.push_back({-20, 12});
  Scenario s;
  s.polygon = Polygon(v);
  // p and q keep a horizontal bisector; the center slides right along it
  // while the path from s wraps further around the chain.
  s.sites = {{"p", {-8, 11}, {10, 0}},
             {"q", {-8, 8}, {10, 0}},
             {"s", {11.5, 0.8}, {0, 0}}};
  validate_scenario(s);
  return s;
}

Scenario gen_pit_tshapes(int m, int n) {
  need(m >= 1, "gen_pit_tshapes needs m >= 1");
  need(n >= 2, "gen_pit_tshapes needs n >= 2");
  const int pairs = n / 2;
  const double len = 1.2, th = 0.4, stem = 0.15, bar = 0.6, gap = 1.6;
  const double corridor = 0.6 + 0.35 * pairs;
  const double w = corridor + len + th + 0.5;
  const double pit = gap * m + 1;
  const double room = pit + 3 + 1.3 * pairs;
  const double R = w + 4;
  std::vector<Point> v = {{-R, pit}, {-w, pit}};
  // left wall, walking down
  for (int i = 0; i < m; i += 2) {
    double yc = pit - 1 - gap * i;
    double x0 = -w, x1 = -w + len, x2 = x1 + th;
    v.insert(v.end(), {{x0, yc + stem}, {x1, yc + stem}, {x1, yc + bar},
                       {x2, yc + bar}, {x2, yc - bar}, {x1, yc - bar},
                       {x1, yc - stem}, {x0, yc - stem}});
  }
  v.push_back({-w, 0});
  v.push_back({w, 0});
  // right wall, walking up
  std::vector<int> right;
  for (int i = 1; i < m; i += 2) right.push_back(i);
  std::reverse(right.begin(), right.end());
  for (int i : right) {
    double yc = pit - 1 - gap * i;
    double x0 = w, x1 = w - len, x2 = x1 - th;
    v.insert(v.end(), {{x0, yc - stem}, {x1, yc - stem}, {x1, yc - bar},
                       {x2, yc - bar}, {x2, yc + bar}, {x1, yc + bar},
                       {x1, yc + stem}, {x0, yc + stem}});
  }
  v.push_back({w, pit});
  v.push_back({R, pit});
  v.push_back({R, room});
  v.push_back({-R, room});
  Scenario s;
  s.polygon = Polygon(v);
  // A static anchor sits in the room; the rest start at staggered heights
  // and fall at one speed, so they enter the pit one after another.
  s.sites.push_back({sid("d", 0), {-R + 1, room - 1}, {0, 0}});
  const double speed = 0.8 * pit;
  for (int i = 1; i < n; ++i) {
    int j = (i - 1) / 2;
    double side = i % 2 == 1 ? -1 : 1;
    double x = side * (0.45 + 0.35 * j) + jit(i, 0.1);
    double y = pit + 1 + 1.3 * j + jit(3 * i + 1, 0.2);
    s.sites.push_back({sid("d", i), {x, y}, {jit(5 * i, 0.05), -speed}});
  }
  validate_scenario(s);
  return s;
}

Scenario gen_pit_spikes(int m, int n, bool floor_sites) {
  need(m >= 2, "gen_pit_spikes needs m >= 2");
  need(n >= 3, "gen_pit_spikes needs n >= 3");
  const double w = 9, H = 3, spike = 1, R = w + 12, top = H + 7;
  const double shift = 7;  // every moving site travels 2*shift to the right
  std::vector<Point> v = {{-R, H}, {-w, H}, {-w, 0}};
  const double step = 2 * w / m;
  for (int i = 0; i < m; ++i) {
    double x0 = -w + step * i;
    // quadratic index keeps consecutive peaks off a common line
    v.push_back({x0 + 0.5 * step, spike * (1 + jit(i * i + 2 * i, 0.3))});
    if (i + 1 < m) v.push_back({x0 + step, 0});
  }
  v.push_back({w, 0});
  v.push_back({w, H});
  v.push_back({R, H});
  v.push_back({R, top});
  v.push_back({-R, top});
  Scenario s;
  s.polygon = Polygon(v);
  const Vec drift{2 * shift, 0};
  if (floor_sites) {
    // p and q pass over a row of sites above the spikes; the bisector of
    // p and q crosses the bisector of each neighbouring floor pair.
    s.sites.push_back({"p", {-1.5 - shift, 5.2}, drift + Vec{0, -0.2}});
    s.sites.push_back({"q", {1.53 - shift, 5.02}, drift + Vec{0, 0.2}});
    const int rest = n - 2;
    for (int i = 0; i < rest; ++i) {
      double x = -w + 2 * w * (i + 0.5) / rest + 0.15 * std::sin(3.0 * i + 1);
      s.sites.push_back(
          {sid("f", i), {x, 1.4 + 0.05 * std::sin(5.0 * i)}, {0, 0}});
    }
  } else {
    // Three sites far apart translate together; their center runs along
    // the pit floor and hits the spike sides.
    s.sites.push_back({"r", {0.1 - shift, 9.5}, drift});
    s.sites.push_back({"p", {-7.9 - shift, 4.2}, drift + Vec{0, -0.2}});
    s.sites.push_back({"q", {7.93 - shift, 4.02}, drift + Vec{0, 0.2}});
    // the rest watch from the side walls
    const int rest = n - 3, per = (rest + 1) / 2;
    for (int i = 0; i < rest; ++i) {
      double side = i % 2 ? 1 : -1;
      double y = H + 0.6 + (top - H - 1.2) * (i / 2 + 0.5) / per;
      s.sites.push_back(
          {sid("a", i), {side * (R - 0.6 - 0.2 * std::sin(5.0 * i)), y}, {0, 0}});
    }
  }
  validate_scenario(s);
  return s;
}

Scenario gen_mirrored_wineglasses(int m, int n, bool perturb) {
  need(m >= 2, "gen_mirrored_wineglasses needs m >= 2");
  (void)n;
  const int k = m;
  const double r = 1.0, a = 1.15, lo = -60, hi = -10;
  const double W = 6, depth = 3, mid = 6;
  const double base = r * std::sin(rad(-lo));
  const double rim = r * std::sin(rad(hi)) + 0.5;
  // wall point i of the lower glass; the upper glass mirrors y about mid
  auto right_wall = [&](int i, bool upper) {
    double nudge = perturb ? (upper ? 0.55 : 0.3) : 0.0;
    double th = rad(lo + nudge + (hi - lo - 2 * nudge) * i / (k - 1));
    return Point{a - r * std::cos(th), r * std::sin(th)};
  };
  auto left_wall = [&](int i) {
    double th = rad(lo + (hi - lo) * i / (k - 1));
    return Point{-a + r * std::cos(th), r * std::sin(th)};
  };
  auto up = [&](Point p) { return Point{p.x, 2 * mid - p.y}; };
  std::vector<Point> v = {{-W, -depth}, {W, -depth}, {W, -base}};
  for (int i = 0; i < k; ++i) v.push_back(right_wall(i, false));
  v.push_back({W, rim});
  v.push_back(up({W, rim}));
  for (int i = k - 1; i >= 0; --i) v.push_back(up(right_wall(i, true)));
  v.push_back(up({W, -base}));
  v.push_back(up({W, -depth}));
  v.push_back(up({-W, -depth}));
  v.push_back(up({-W, -base}));
  for (int i = 0; i < k; ++i) v.push_back(up(left_wall(i)));
  v.push_back(up({-W, rim}));
  v.push_back({-W, rim});
  for (int i = k - 1; i >= 0; --i) v.push_back(left_wall(i));
  v.push_back({-W, -base});
  Scenario s;
  s.polygon = Polygon(v);
  // One site walks under each throat while its partner drifts.
  s.sites = {{"p", {-5, -2.5}, {4, 0}},
             {"q", {3, -2.49}, {-0.3, 0.05}},
             {"p2", {5, 2 * mid + 2.45}, {-4, 0}},
             {"q2", {-3, 2 * mid + 2.52}, {0.35, -0.04}}};
  validate_scenario(s);
  return s;
}

Scenario gen_grid_sweep(int m, int n) {
  need(m >= 2, "gen_grid_sweep needs m >= 2");
  need(n >= 2, "gen_grid_sweep needs n >= 2");
  const int fixed = n - 1;
  // Obstacle: disk cap on the floor whose upper left arc carries the chain.
  const double cx = 2, r = 5, xf = -20, top = 12, right = 12;
  const double a0 = 95, a1 = 165;
  auto on_arc = [&](double deg) {
    return Point{cx + r * std::cos(rad(deg)), r * std::sin(rad(deg))};
  };
  std::vector<Point> v = {{xf - 2, 0}, {cx - r, 0}, on_arc(175)};
  for (int i = 0; i < m; ++i) v.push_back(on_arc(a1 - (a1 - a0) * i / (m - 1)));
  v.push_back(on_arc(50));
  v.push_back({cx + r, 0});
  v.push_back({right, 0});
  v.push_back({right, top});
  v.push_back({xf - 2, top});
  Scenario s;
  s.polygon = Polygon(v);
  // A column of fixed sites far left; their bisectors cross the lines
  // extending the chain edges. The dropped site sinks behind the
  // obstacle so its cell retreats across that grid.
  for (int i = 0; i < fixed; ++i) {
    double y = 1.5 + 4.0 * (i + 0.5) / fixed + 0.05 * std::sin(7.0 * i);
    s.sites.push_back({sid("f", i), {xf + 0.3 * std::sin(3.0 * i), y}, {0, 0}});
  }
  s.sites.push_back({"drop", {0, 11.5}, {11, -11}});
  validate_scenario(s);
  return s;
}

Scenario random_scenario(int m, int n, uint64_t seed) {
  need(m >= 3, "random_scenario needs m >= 3");
  need(n >= 1, "random_scenario needs n >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0;; ++attempt) {
    Scenario s;
    s.polygon = random_star(m, rng());
    uint64_t st = rng();
    for (int i = 0; i < n; ++i) {
      Trajectory tr = random_linear_motion(s.polygon, &st, 1e-2, 1.0);
      s.sites.push_back({sid("r", i), tr.p0, tr.vel});
    }
    try {
      validate_scenario(s);
      return s;
    } catch (const Error&) {
      if (attempt > 100) throw;
    }
  }
}

std::vector<std::string> generator_names() {
  return {"wineglass",        "center_swing",         "pit_tshapes",
          "pit_spikes",       "pit_spikes_floor",     "mirrored_wineglasses",
          "grid_sweep"};
}

Scenario generate(const std::string& name, int m, int n, uint64_t seed) {
  if (name == "wineglass") return gen_wineglass(m);
  if (name == "center_swing") return gen_center_swing(m);
  if (name == "pit_tshapes") return gen_pit_tshapes(m, n);
  if (name == "pit_spikes") return gen_pit_spikes(m, n, false);
  if (name == "pit_spikes_floor") return gen_pit_spikes(m, n, true);
  if (name == "mirrored_wineglasses") return gen_mirrored_wineglasses(m, n);
  if (name == "grid_sweep") return gen_grid_sweep(m, n);
  if (name == "random") return random_scenario(m, n, seed);
  throw Error(ErrorKind::kInvalidArgument, "unknown generator: " + name);
}

}  // namespace kgvd::scenarios
