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

#ifndef KGVD_GEOM_TOLERANCE_HPP_
#define KGVD_GEOM_TOLERANCE_HPP_

#include "kgvd/geom/error.hpp"

namespace kgvd {

struct Tolerance {
  double eps_geom = 1e-9;
  double eps_time = 1e-9;

  static Tolerance for_scene(double diameter, double horizon) {
    Tolerance t;
    t.eps_geom = 1e-9 * (diameter > 0 ? diameter : 1.0);
    t.eps_time = 1e-9 * (horizon > 0 ? horizon : 1.0);
    return t;
  }
  void check() const {
    if (!(eps_geom > 0) || !(eps_time > 0))
      throw Error(ErrorKind::kInvalidArgument, "tolerances must be positive");
  }
};

}  // namespace kgvd

#endif  // KGVD_GEOM_TOLERANCE_HPP_
