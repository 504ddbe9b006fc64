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

#include <cmath>

#include "kgvd/geom/error.hpp"
#include "kgvd/scenarios/generators.hpp"

namespace kgvd::scenarios {

namespace {

double rad(double deg) { return deg * M_PI / 180.0; }

void need(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
}

}  // namespace

Scenario gen_wineglass(int m_chain) {
  need(m_chain >= 2, "gen_wineglass needs m_chain >= 2");
  const int k = m_chain;
  const double r = 1.0, a = 1.15;     // throat wall radius and center offset
  const double lo = -60, hi = -10;    // wall angles, degrees
  const double W = 6, depth = 3, cup = 6;
  const double base = r * std::sin(rad(-lo));
  const double rim = r * std::sin(rad(hi)) + 0.5;
  std::vector<Point> v;
  v.push_back({-W, -depth});
  v.push_back({W, -depth});
  v.push_back({W, -base});
  // Right wall, angles nudged so the two fans are not mirror images.
  for (int i = 0; i < k; ++i) {
    double th = rad(lo + 0.3 + (hi - lo - 0.6) * i / (k - 1));
    v.push_back({a - r * std::cos(th), r * std::sin(th)});
  }
  v.push_back({W, rim});
  v.push_back({W, cup});
  v.push_back({-W, cup});
  v.push_back({-W, rim});
  for (int i = k - 1; i >= 0; --i) {
    double th = rad(lo + (hi - lo) * i / (k - 1));
    v.push_back({-a + r * std::cos(th), r * std::sin(th)});
  }
  v.push_back({-W, -base});
  Scenario s;
  s.polygon = Polygon(v);
  s.sites = {{"p", {-5, -2.5}, {4, 0}}, {"q", {3, -2.49}, {0, 0}}};
  s.t0 = 0;
  s.t1 = 1;
  validate_scenario(s);
  return s;
}

}  // namespace kgvd::scenarios
