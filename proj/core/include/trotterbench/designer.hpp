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

// Coefficient design for the five-exponential W2 family. Coefficients are
// indexed as in
//   W2(s) = e^{-iA a1 s} e^{-iB a2 s} e^{-iA a3 s} e^{-iB a4 s} e^{-iA a5 s}
// and must satisfy
//   a1 + a3 + a5 = 1,  a2 + a4 = 1                              (first order)
//   a1(a2+a4) - a2(a3+a5) + a3a4 - a4a5 = 0                     (no [A,B])
//   a1^2(a2+a4)/2 - a1a2(a3+a5) + a1a3a4 - a1a4a5 + a3^2a4/2 - a3a4a5
//     = -a2^2(a3+a5)/2 + a2a3a4 - a2a4a5 - a4^2a5/2             ([A,[A,B]] and
//                                                                [B,[A,B]] equal)
// With a4 free, a2 = 1 - a4 and a5 = 1 - a1 - a3 leave two polynomial
// equations in (a1, a3), solved here by multi-start damped Newton.

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "trotterbench/formula.hpp"

namespace trotterbench {

using W2Coefficients = std::array<double, 5>;

struct SolverOptions {
  double step_tol = 1e-12;       // Newton step size at convergence
  double residual_gate = 1e-10;  // accepted roots satisfy all residuals below this
  int grid_points = 7;           // per axis; grid_points^2 >= 25 starts
  double box = 2.0;              // starts cover [-box, box]^2
  int max_iterations = 200;
  double dedup_distance = 1e-8;
};

struct SolverSolution {
  W2Coefficients a{};
  std::array<double, 3> residuals{};  // first order, [A,B], equal coefficients
  double a4 = 0.0;
  int branch = 0;
};

/// Left-minus-right sides of the three condition groups, as absolute values.
std::array<double, 3> w2_residuals(const W2Coefficients& a);

/// All distinct real roots for a4, sorted by a1 (the branch index).
/// Empty when none converge.
std::vector<SolverSolution> solve_w2_all(double a4, const SolverOptions& opts = {});

/// Branch `branch` of the solution set. Throws NoRealSolution when a4 lies in
/// [0, 1] or no root converges, BranchOutOfRange for a missing branch.
SolverSolution solve_w2(double a4, int branch = 0, const SolverOptions& opts = {});

ProductFormula w2_formula(const SolverSolution& sol);

struct ScanPoint {
  double a4 = 0.0;
  std::vector<SolverSolution> solutions;  // empty on failure
  std::string error;
};

std::vector<double> scan_grid(double from, double to, double step);

/// Independent per-point solves; output order follows a4_values.
std::vector<ScanPoint> family_scan(std::span<const double> a4_values,
                                   const SolverOptions& opts = {});

/// Columns a4,a1,a2,a3,a5,branch,res1,res2,res3. Failed points are written
/// with branch -1 and nan coefficients.
void write_family_csv(std::ostream& out, const std::vector<ScanPoint>& points);

}  // namespace trotterbench
