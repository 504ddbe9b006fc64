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

#ifndef KGVD_BISECTOR_GUARD_HPP_
#define KGVD_BISECTOR_GUARD_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgvd/geom/roots.hpp"

namespace kgvd {

enum class GuardKind {
  kVertex,          // a polygon vertex changes side of a bisector
  kChordEnd,        // an extension endpoint changes side
  kCrossingPair,    // two adjacent crossings meet at an event point
  kTournamentRoot,  // maximum of a tournament reaches zero
  kCenterFace,      // a center leaves its cell
  kEmptiness,       // another site reaches a vertex of the diagram
  kSpm,             // structural change of one map
};

// Certificate: a continuous function of time whose sign change marks a
// possible combinatorial change.
struct Guard {
  std::string key;  // identical keys denote identical functions
  GuardKind kind = GuardKind::kVertex;
  int a = -1, b = -1;
  std::function<double(double)> f;
  double lipschitz = 0;  // bound on |f'|, 0 when unknown
};

// Remembers failure times across rebuilds of the guard set.
class GuardCache {
 public:
  explicit GuardCache(MarchOptions opt) : opt_(opt) {}
  std::optional<double> failure(const Guard& g, double now, double cap);
  // Drops entries whose keys are not listed.
  void retain(const std::vector<std::string>& keys);
  void clear() { map_.clear(); }

  int64_t computed() const { return computed_; }
  int64_t reused() const { return reused_; }
  const MarchOptions& options() const { return opt_; }

 private:
  struct Entry {
    std::optional<double> fail;
    double from = 0, to = 0;
  };
  MarchOptions opt_;
  std::unordered_map<std::string, Entry> map_;
  int64_t computed_ = 0, reused_ = 0;
};

MarchOptions march_options(double horizon);
std::string key_num(double v);  // exact text form of a double

}  // namespace kgvd

#endif  // KGVD_BISECTOR_GUARD_HPP_
