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

#include <random>

#include "doctest.h"
#include "kgvd/bisector/tournament.hpp"
#include "kgvd/geom/error.hpp"

using namespace kgvd;

TEST_CASE("single entry") {
  OffsetTournament t;
  t.insert({1.0, 7, 2.5, 10.0});
  CHECK(*t.root_max() == 2.5);
  CHECK(*t.max_value() == 12.5);
  CHECK(t.argmax()->id == 7);
}

TEST_CASE("three entries with hand-built anchors") {
  // anchors: 0, 3, -1; values relative to own anchors
  std::vector<EventPoint> eps = {{0.1, 1, 1.0, 0.0}, {0.2, 2, -1.5, 3.0},
                                 {0.3, 3, 2.0, -1.0}};
  OffsetTournament t;
  for (const auto& e : eps) t.insert(e);
  // absolute values 1, 1.5, 1 -> max 1.5 at id 2
  CHECK(*t.max_value() == doctest::Approx(1.5));
  CHECK(t.argmax()->id == 2);
  double root_anchor = t.root_entry()->anchor;
  CHECK(*t.root_max() == doctest::Approx(flat_max(eps, root_anchor)));

  OffsetTournament right = t.split(0.1);
  CHECK(t.size() == 1);
  CHECK(right.size() == 2);
  CHECK(*t.root_max() == doctest::Approx(flat_max(t.entries(), t.root_entry()->anchor)));
  CHECK(*right.root_max() ==
        doctest::Approx(flat_max(right.entries(), right.root_entry()->anchor)));
  CHECK_THROWS_AS(t.remove(eps[1]), Error);
  try {
    t.remove(eps[2]);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUnknownEventPoint);
  }
}

TEST_CASE("randomized operations match flat recomputation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-10, 10);
  for (int round = 0; round < 20; ++round) {
    std::vector<OffsetTournament> ts(1);
    int64_t next_id = 0;
    for (int step = 0; step < 300; ++step) {
      int which = static_cast<int>(rng() % ts.size());
      OffsetTournament& t = ts[which];
      int op = static_cast<int>(rng() % 10);
      if (op < 6 || t.empty()) {
        t.insert({U(rng), next_id++, U(rng), U(rng)});
      } else if (op < 9) {
        auto all = t.entries();
        t.remove(all[rng() % all.size()]);
      } else {
        ts.push_back(t.split(U(rng)));
      }
      for (const OffsetTournament& x : ts) {
        if (x.empty()) continue;
        auto all = x.entries();
        CHECK(*x.root_max() == doctest::Approx(flat_max(all, x.root_entry()->anchor)).epsilon(1e-12));
        for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].key <= all[i].key);
      }
    }
  }
}
