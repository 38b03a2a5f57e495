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

#include "trotterbench/designer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <utility>

namespace trotterbench {

namespace {

// (no-[A,B] condition, equal-coefficient condition), signed.
std::pair<double, double> signed_conditions(const W2Coefficients& a) {
  const double b1 = a[0], b2 = a[1], b3 = a[2], b4 = a[3], b5 = a[4];
  const double g1 = b1 * (b2 + b4) - b2 * (b3 + b5) + b3 * b4 - b4 * b5;
  const double lhs = 0.5 * b1 * b1 * (b2 + b4) - b1 * b2 * (b3 + b5) + b1 * b3 * b4 -
                     b1 * b4 * b5 + 0.5 * b3 * b3 * b4 - b3 * b4 * b5;
  const double rhs =
      -0.5 * b2 * b2 * (b3 + b5) + b2 * b3 * b4 - b2 * b4 * b5 - 0.5 * b4 * b4 * b5;
  return {g1, lhs - rhs};
}

struct Reduced {
  double a4;

  W2Coefficients full(double a1, double a3) const {
    return {a1, 1.0 - a4, a3, a4, 1.0 - a1 - a3};
  }

  Eigen::Vector2d value(double a1, double a3) const {
    const auto [g1, g2] = signed_conditions(full(a1, a3));
    return {g1, g2};
  }

  Eigen::Matrix2d jacobian(double a1, double a3) const {
    const auto a = full(a1, a3);
    const double b1 = a[0], b2 = a[1], b3 = a[2], b4 = a[3], b5 = a[4];
    // Partials with respect to (a1, a3, a5); a5 = 1 - a1 - a3.
    const double g1_1 = b2 + b4;
    const double g1_3 = -b2 + b4;
    const double g1_5 = -b2 - b4;
    const double l_1 = b1 * (b2 + b4) - b2 * (b3 + b5) + b3 * b4 - b4 * b5;
    const double l_3 = -b1 * b2 + b1 * b4 + b3 * b4 - b4 * b5;
    const double l_5 = -b1 * b2 - b1 * b4 - b3 * b4;
    const double r_3 = -0.5 * b2 * b2 + b2 * b4;
    const double r_5 = -0.5 * b2 * b2 - b2 * b4 - 0.5 * b4 * b4;
    const double g2_1 = l_1;
    const double g2_3 = l_3 - r_3;
    const double g2_5 = l_5 - r_5;
    Eigen::Matrix2d j;
    j << g1_1 - g1_5, g1_3 - g1_5, g2_1 - g2_5, g2_3 - g2_5;
    return j;
  }
};

bool newton(const Reduced& sys, Eigen::Vector2d& x, const SolverOptions& opts) {
  Eigen::Vector2d g = sys.value(x[0], x[1]);
  for (int it = 0; it < opts.max_iterations; ++it) {
    const Eigen::Matrix2d j = sys.jacobian(x[0], x[1]);
    if (!(std::abs(j.determinant()) > 1e-14)) return false;
    const Eigen::Vector2d step = -j.partialPivLu().solve(g);
    double lambda = 1.0;
    Eigen::Vector2d trial = x + step;
    Eigen::Vector2d g_trial = sys.value(trial[0], trial[1]);
    while (g_trial.norm() >= g.norm() && lambda > 1e-6) {
      lambda *= 0.5;
      trial = x + lambda * step;
      g_trial = sys.value(trial[0], trial[1]);
    }
    const double moved = (trial - x).norm();
    x = trial;
    g = g_trial;
    if (!x.allFinite() || x.norm() > 1e8) return false;
    if (moved < opts.step_tol * std::max(1.0, x.norm())) break;
    if (g.norm() == 0.0) break;
  }
  return g.norm() < opts.residual_gate;
}

}  // namespace

std::array<double, 3> w2_residuals(const W2Coefficients& a) {
  const double first = std::max(std::abs(a[0] + a[2] + a[4] - 1.0), std::abs(a[1] + a[3] - 1.0));
  const auto [g1, g2] = signed_conditions(a);
  return {first, std::abs(g1), std::abs(g2)};
}

std::vector<SolverSolution> solve_w2_all(double a4, const SolverOptions& opts) {
  const Reduced sys{a4};
  std::vector<Eigen::Vector2d> roots;
  const int n = std::max(opts.grid_points, 2);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Eigen::Vector2d x(-opts.box + 2.0 * opts.box * i / (n - 1),
                        -opts.box + 2.0 * opts.box * k / (n - 1));
      if (!newton(sys, x, opts)) continue;
      const bool seen = std::any_of(roots.begin(), roots.end(), [&](const Eigen::Vector2d& r) {
        return (r - x).norm() < opts.dedup_distance;
      });
      if (!seen) roots.push_back(x);
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Eigen::Vector2d& p, const Eigen::Vector2d& q) { return p[0] < q[0]; });

  std::vector<SolverSolution> out;
  for (const auto& r : roots) {
    SolverSolution sol;
    sol.a = sys.full(r[0], r[1]);
    sol.residuals = w2_residuals(sol.a);
    sol.a4 = a4;
    if (*std::max_element(sol.residuals.begin(), sol.residuals.end()) >= opts.residual_gate) {
      continue;
    }
    sol.branch = static_cast<int>(out.size());
    out.push_back(sol);
  }
  return out;
}

SolverSolution solve_w2(double a4, int branch, const SolverOptions& opts) {
  if (!std::isfinite(a4)) throw UsageError("solve_w2: a4 must be finite");
  if (a4 >= 0.0 && a4 <= 1.0) {
    throw NoRealSolution("solve_w2: no real solution for a4 in [0, 1]");
  }
  const auto all = solve_w2_all(a4, opts);
  if (all.empty()) {
    throw NoRealSolution("solve_w2: no converged real root for a4 = " + std::to_string(a4));
  }
  if (branch < 0 || static_cast<std::size_t>(branch) >= all.size()) {
    throw BranchOutOfRange("solve_w2: branch " + std::to_string(branch) + " requested, " +
                           std::to_string(all.size()) + " available");
  }
  return all[static_cast<std::size_t>(branch)];
}

ProductFormula w2_formula(const SolverSolution& sol) { return custom_w2(sol.a); }

std::vector<double> scan_grid(double from, double to, double step) {
  if (!(step > 0.0)) throw UsageError("scan step must be positive");
  if (to < from) throw UsageError("scan range is empty");
  std::vector<double> out;
  const auto count = static_cast<long long>(std::floor((to - from) / step + 1e-9));
  for (long long i = 0; i <= count; ++i) out.push_back(from + static_cast<double>(i) * step);
  return out;
}

std::vector<ScanPoint> family_scan(std::span<const double> a4_values, const SolverOptions& opts) {
  std::vector<ScanPoint> out;
  out.reserve(a4_values.size());
  for (double a4 : a4_values) {
    ScanPoint p;
    p.a4 = a4;
    try {
      solve_w2(a4, 0, opts);
      p.solutions = solve_w2_all(a4, opts);
    } catch (const Error& e) {
      p.error = e.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

void write_family_csv(std::ostream& out, const std::vector<ScanPoint>& points) {
  out << "a4,a1,a2,a3,a5,branch,res1,res2,res3\n";
  char buf[512];
  for (const auto& p : points) {
    if (p.solutions.empty()) {
      std::snprintf(buf, sizeof buf, "%.17g,nan,nan,nan,nan,-1,nan,nan,nan\n", p.a4);
      out << buf;
      continue;
    }
    for (const auto& s : p.solutions) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%d,%.3e,%.3e,%.3e\n", p.a4,
                    s.a[0], s.a[1], s.a[2], s.a[4], s.branch, s.residuals[0], s.residuals[1],
                    s.residuals[2]);
      out << buf;
    }
  }
}

}  // namespace trotterbench
