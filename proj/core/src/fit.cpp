// Copyright 2026 The trotterbench Authors
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

#include "trotterbench/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "trotterbench/errors.hpp"

namespace trotterbench {

namespace {

using Sample = std::pair<double, double>;  // (log s, log |y|)

FitResult ols(std::span<const Sample> pts) {
  const auto n = static_cast<double>(pts.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (!(sxx > 0)) throw InsufficientPoints("fit_slope: all s values coincide");
  FitResult r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  // A flat series is fit exactly by slope 0.
  r.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  r.points_used = pts.size();
  r.s_lo = std::exp(pts.front().first);
  r.s_hi = std::exp(pts.back().first);
  return r;
}

}  // namespace

FitResult fit_slope(std::span<const double> s, std::span<const double> y,
                    const FitOptions& opts) {
  if (s.size() != y.size()) {
    throw UsageError("fit_slope: s and y differ in length");
  }
  std::vector<Sample> pts;
  std::size_t excluded = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double ay = std::abs(y[i]);
    if (!(s[i] > 0) || !std::isfinite(s[i]) || !(ay > 0) || !std::isfinite(ay)) {
      ++excluded;
      continue;
    }
    pts.emplace_back(std::log(s[i]), std::log(ay));
  }
  const std::size_t need = std::max<std::size_t>(opts.min_points, 2);
  if (pts.size() < need) {
    throw InsufficientPoints("fit_slope: " + std::to_string(pts.size()) +
                             " usable points, need " + std::to_string(need));
  }
  std::sort(pts.begin(), pts.end());

  std::span<const Sample> window(pts);
  FitResult r = ols(window);
  if (opts.auto_window) {
    while (r.r_squared < opts.r_squared_target && window.size() > need) {
      window = window.first(window.size() - 1);
      r = ols(window);
    }
  }
  r.excluded = excluded;
  return r;
}

}  // namespace trotterbench
