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

// Step-size sweeps: one SpectroReport per (formula, s), serialized as CSV with
// the header
//   formula,s,exact_delta_e,spectral_error,first_order_shift,
//   predicted_delta_e,overlap_deficiency,gap,matched_overlap,flag
// A row whose evaluation failed keeps its (formula, s) key, NaN values and
// the failure kind in `flag`; the rest of the sweep carries on.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trotterbench/fit.hpp"
#include "trotterbench/formula.hpp"
#include "trotterbench/hamiltonian_spec.hpp"
#include "trotterbench/spectro.hpp"

namespace trotterbench {

/// `points` values spaced geometrically from s_max down to s_min.
std::vector<double> geometric_grid(double s_max, double s_min, int points);

struct SweepConfig {
  HamiltonianSpec hamiltonian;
  std::vector<std::string> formulas = {"strang"};
  double s_max = 1e-1;
  double s_min = 1e-3;
  int points = 13;
  TargetSelector target;
  std::optional<std::uint64_t> seed;  // overrides hamiltonian.seed when set
  SpectroOptions spectro;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
  std::string formula;
  SpectroReport report;
  std::string flag = "ok";  // ok | weak-match | aliasing | ambiguous-match | <error kind>

  bool ok() const { return flag == "ok" || flag == "weak-match"; }
};

struct SweepResult {
  std::string hamiltonian_digest;
  Precision precision = Precision::Double;
  std::vector<SweepRow> rows;

  /// Rows of one formula, in sweep order.
  std::vector<SweepRow> rows_for(const std::string& formula) const;
};

SweepResult run_sweep(const PartitionedHamiltonian& h, std::span<const ProductFormula> formulas,
                      std::span<const double> s_values, TargetSelector target = {},
                      SpectroOptions opts = {}, unsigned threads = 0);
SweepResult run_sweep(const SweepConfig& cfg);

/// Which report column to fit.
enum class Quantity {
  ExactDeltaE,
  SpectralError,
  FirstOrderShift,
  PredictedDeltaE,
  OverlapDeficiency,
  PredictionError,  // |predicted - exact|
};

Quantity parse_quantity(const std::string& name);
std::string to_string(Quantity q);
double quantity_of(const SpectroReport& r, Quantity q);

/// Fits one quantity over the successful rows of `formula`.
FitResult fit_rows(std::span<const SweepRow> rows, const std::string& formula, Quantity q,
                   const FitOptions& opts = {});

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_sweep_csv(const std::string& path, std::span<const SweepRow> rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);
std::vector<SweepRow> read_sweep_csv(const std::string& path);

}  // namespace trotterbench
