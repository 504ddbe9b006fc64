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

#include "kgvd/geom/roots.hpp"

#include <algorithm>
#include <cmath>

namespace kgvd {

namespace {

int sgn(double v) { return (v > 0) - (v < 0); }

double residual(const Point& a, double ka, const Point& b, double kb,
                const Point& x) {
  return dist(x, a) + ka - dist(x, b) - kb;
}

}  // namespace

std::vector<double> equal_distance_roots(const Point& a, double add_a,
                                         const Point& b, double add_b,
                                         const Point& p0, const Point& p1) {
  std::vector<double> out;
  const Vec d = p1 - p0;
  const double dl = norm(d);
  if (dl == 0) return out;
  const double k = add_b - add_a;  // |x-a| - |x-b| = k
  const double pa2 = norm2(p0 - a), pb2 = norm2(p0 - b);
  const double alpha = pa2 - pb2 - k * k;
  const double beta = 2 * dot(d, b - a);
  std::vector<double> cand;
  if (k == 0) {
    if (beta != 0) cand.push_back(-alpha / beta);
  } else {
    const double qa = beta * beta - 4 * k * k * norm2(d);
    const double qb = 2 * alpha * beta - 8 * k * k * dot(d, p0 - b);
    const double qc = alpha * alpha - 4 * k * k * pb2;
    const double scale = std::max({std::fabs(qa), std::fabs(qb), std::fabs(qc)});
    if (scale == 0) return out;
    if (std::fabs(qa) <= 1e-14 * scale) {
      if (qb != 0) cand.push_back(-qc / qb);
    } else {
      double disc = qb * qb - 4 * qa * qc;
      if (disc < 0) {
        if (disc > -1e-12 * qb * qb) disc = 0;
        else return out;
      }
      double sq = std::sqrt(disc);
      double q = -0.5 * (qb + (qb >= 0 ? sq : -sq));
      if (q != 0) {
        cand.push_back(q / qa);
        cand.push_back(qc / q);
      } else {
        cand.push_back(0.0);
      }
    }
  }
  const double scale = dl + std::sqrt(pa2) + std::sqrt(pb2) + std::fabs(k);
  for (double l : cand) {
    if (!std::isfinite(l)) continue;
    if (l < -1e-9 || l > 1 + 1e-9) continue;
    l = std::clamp(l, 0.0, 1.0);
    // Newton polish
    for (int it = 0; it < 4; ++it) {
      Point x = p0 + d * l;
      double f = residual(a, add_a, b, add_b, x);
      double ra = dist(x, a), rb = dist(x, b);
      if (ra == 0 || rb == 0) break;
      double fp = dot(d, x - a) / ra - dot(d, x - b) / rb;
      if (fp == 0) break;
      double nl = std::clamp(l - f / fp, 0.0, 1.0);
      if (std::fabs(residual(a, add_a, b, add_b, p0 + d * nl)) <= std::fabs(f))
        l = nl;
      else
        break;
    }
    if (std::fabs(residual(a, add_a, b, add_b, p0 + d * l)) > 1e-9 * scale)
      continue;
    bool dup = false;
    for (double o : out) dup |= std::fabs(o - l) * dl < 1e-7 * scale;
    if (!dup) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double bisect_sign_change(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  int s_lo = sgn(f(lo));
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fm = f(mid);
    if (std::isnan(fm)) {
      hi = mid;
      continue;
    }
    if (sgn(fm) == s_lo && fm != 0) lo = mid;
    else hi = mid;
  }
  return hi;
}

std::optional<double> first_sign_change(const std::function<double(double)>& f,
                                        double t0, double t1,
                                        const MarchOptions& opt) {
  if (!(t1 > t0)) return std::nullopt;
  double ft = f(t0);
  if (std::isnan(ft)) return std::nullopt;
  int s0 = sgn(ft);
  if (s0 == 0) return std::nullopt;
  double t = t0;
  double slope = -1;
  while (t < t1) {
    double h;
    if (opt.lipschitz > 0) {
      h = std::fabs(ft) / opt.lipschitz;
    } else {
      double probe = std::min(opt.h_min, t1 - t);
      double fp = f(t + probe);
      if (std::isnan(fp)) return std::nullopt;
      if (sgn(fp) != s0) return bisect_sign_change(f, t, t + probe, opt.tol);
      double local = std::fabs(fp - ft) / probe;
      double sl = std::max(local, slope);
      h = sl > 0 ? 0.3 * std::fabs(ft) / sl : opt.h_max;
    }
    h = std::clamp(h, opt.h_min, opt.h_max);
    double tn = std::min(t + h, t1);
    double fn = f(tn);
    if (std::isnan(fn)) return std::nullopt;
    if (sgn(fn) != s0) return bisect_sign_change(f, t, tn, opt.tol);
    slope = std::fabs(fn - ft) / (tn - t);
    t = tn;
    ft = fn;
  }
  return std::nullopt;
}

}  // namespace kgvd
