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
#include <memory>

#include "doctest.h"
#include "kgvd/geom/error.hpp"
#include "kgvd/gvd/diagram.hpp"
#include "kgvd/oracle/labels.hpp"
#include "kgvd/scenarios/shapes.hpp"

using namespace kgvd;

namespace {

Diagram static_diagram(const Polygon& p, const std::vector<Point>& sites) {
  DomainPtr d = make_domain(p);
  std::vector<SpmPtr> spms;
  for (const Point& x : sites)
    spms.push_back(std::make_shared<ExtendedSpm>(build_spm(d, x)));
  return Diagram::build(d, spms);
}

double area_sum(const Diagram& d) {
  double a = 0;
  for (int i = 0; i < d.n(); ++i) a += d.cell_area(i);
  return a;
}

// Share of unambiguous grid probes whose cell agrees with the oracle.
double agreement(const Diagram& d, const Polygon& p,
                 const std::vector<Point>& sites) {
  oracle::VisibilityGraph vg(p);
  auto g = oracle::grid_labels(vg, sites, 48, 1e-9 * p.diameter());
  int agree = 0;
  for (size_t i = 0; i < g.points.size(); ++i)
    if (!g.ambiguous[i] && d.cell_label(g.points[i]) == g.label[i]) ++agree;
  return static_cast<double>(agree) / g.unambiguous();
}

}  // namespace

TEST_CASE("square with two symmetric sites") {
  Diagram d = static_diagram(scenarios::square4(), {{1, 2}, {3, 2}});
  REQUIRE(d.edges().size() == 1);
  CHECK(d.degree1_count() == 2);
  CHECK(d.degree3_count() == 0);
  auto line = d.edge_polyline(0, 1e-9);
  for (const Point& x : line) CHECK(x.x == doctest::Approx(2).epsilon(1e-12));
  CHECK(area_sum(d) == doctest::Approx(16).epsilon(1e-12));
  CHECK(d.cell_area(0) == doctest::Approx(8).epsilon(1e-12));
}

TEST_CASE("square with the circumcenter triple") {
  Diagram d = static_diagram(scenarios::square4(), {{1, 1}, {3, 1}, {2, 3}});
  REQUIRE(d.degree3_count() == 1);
  CHECK(dist(d.centers()[0].x, {2, 1.75}) < 1e-9);
  CHECK(d.centers()[0].d == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(d.degree1_count() == 3);
  CHECK(d.edges().size() == 3);
  CHECK(std::fabs(area_sum(d) - 16) < 1e-6 * 16);
}

TEST_CASE("L-shape with a hidden site has a degree-2 vertex") {
  const Polygon p = scenarios::l_shape();
  std::vector<Point> sites = {{3.4, 0.6}, {0.5, 3.3}, {3.5, 1.8}};
  Diagram d = static_diagram(p, sites);
  CHECK(d.degree2_count() >= 1);
  CHECK(std::fabs(area_sum(d) - p.area()) < 1e-6 * p.area());
  CHECK(agreement(d, p, sites) >= 0.999);
}

TEST_CASE("random polygons: partition, labels and degree bounds") {
  uint64_t state = 31;
  for (int m : {12, 24, 48}) {
    Polygon p = scenarios::random_star(m, 100 + m);
    for (int n : {3, 5}) {
      std::vector<Point> sites;
      for (int i = 0; i < n; ++i)
        sites.push_back(scenarios::random_interior_point(p, &state, 1e-2));
      Diagram d = static_diagram(p, sites);
      CHECK(std::fabs(area_sum(d) - p.area()) < 1e-6 * p.area());
      CHECK(d.degree2_count() <= p.size());
      CHECK(d.degree3_count() <= 2 * n - 5);
      CHECK(d.degree3_count() <= n - 2);  // the diagram is a tree
      CHECK(agreement(d, p, sites) >= 0.999);
      // fingerprints are a pure function of the geometry
      CHECK(static_diagram(p, sites).fingerprint() == d.fingerprint());
    }
  }
}

TEST_CASE("four cocircular sites are refused") {
  try {
    // on the circle of radius 1.2 about (2, 2), off every symmetry axis
    std::vector<Point> ring;
    for (double deg : {10.0, 100.0, 200.0, 300.0}) {
      double a = deg * M_PI / 180;
      ring.push_back({2 + 1.2 * std::cos(a), 2 + 1.2 * std::sin(a)});
    }
    static_diagram(scenarios::square4(), ring);
    FAIL("accepted cocircular sites");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDegenerateCocircularSites);
  }
}
