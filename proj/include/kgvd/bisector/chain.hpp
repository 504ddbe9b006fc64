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

#ifndef KGVD_BISECTOR_CHAIN_HPP_
#define KGVD_BISECTOR_CHAIN_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "kgvd/bisector/bisector.hpp"

namespace kgvd {

// A bisector read as a curve over s in [0, arcs]; arc i covers [i, i+1]
// and node i sits at s = i.
double chain_end(const Bisector& b);
int chain_arc(const Bisector& b, double s);
Point chain_point(const Bisector& b, double s);
// Distance to the first site along the chain.
double chain_distance(const Bisector& b, const ExtendedSpm& p, double s);

// Flattened piece [s0, s1] with chord deviation below tol.
std::vector<Point> chain_polyline(const Bisector& b, double s0, double s1,
                                  double tol);

// Sign changes of f over [s0, s1]: f is sampled at every node and
// `per_arc` interior points, brackets refined to width tol.
std::vector<double> chain_roots(const Bisector& b,
                                const std::function<double(double)>& f,
                                double s0, double s1, int per_arc, double tol);

}  // namespace kgvd

#endif  // KGVD_BISECTOR_CHAIN_HPP_
