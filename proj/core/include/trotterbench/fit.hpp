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

#pragma once

#include <cstddef>
#include <span>

namespace trotterbench {

/// Log-log least-squares fit log|y| = slope * log s + intercept.
struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double s_lo = 0.0;  // smallest s used
  double s_hi = 0.0;  // largest s used
  std::size_t points_used = 0;
  std::size_t excluded = 0;  // zero or non-finite samples dropped up front
};

struct FitOptions {
  bool auto_window = false;
  double r_squared_target = 0.999;
  std::size_t min_points = 4;
};

/// Zero and non-finite |y| are excluded. With auto_window the largest-s
/// samples are dropped one at a time (keeping min_points) until the fit
/// reaches r_squared_target. Throws InsufficientPoints below min_points.
FitResult fit_slope(std::span<const double> s, std::span<const double> y,
                    const FitOptions& opts = {});

}  // namespace trotterbench
