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

#include "trotterbench/figures.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "trotterbench/designer.hpp"
#include "trotterbench/errors.hpp"
#include "trotterbench/formula_spec.hpp"
#include "trotterbench/hamiltonian.hpp"
#include "trotterbench/sweep.hpp"

namespace trotterbench {

Figure parse_figure(const std::string& name) {
  if (name == "left") return Figure::Left;
  if (name == "middle") return Figure::Middle;
  if (name == "right") return Figure::Right;
  throw UsageError("figure must be left, middle or right, got '" + name + "'");
}

std::string to_string(Figure f) {
  switch (f) {
    case Figure::Left: return "left";
    case Figure::Middle: return "middle";
    case Figure::Right: return "right";
  }
  return "left";
}

namespace {

std::string join(const std::string& dir, const std::string& file) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / file).string();
}

std::string slope_line(const SweepResult& sweep, const std::string& formula, Quantity q) {
  char buf[200];
  try {
    FitOptions opts;
    opts.auto_window = true;
    const FitResult fit = fit_rows(sweep.rows, formula, q, opts);
    std::snprintf(buf, sizeof buf, "%-16s %-18s slope %6.3f  (s in [%.2e, %.2e], r^2 %.5f)",
                  formula.c_str(), to_string(q).c_str(), fit.slope, fit.s_lo, fit.s_hi,
                  fit.r_squared);
  } catch (const InsufficientPoints& e) {
    std::snprintf(buf, sizeof buf, "%-16s %-18s no fit: %s", formula.c_str(),
                  to_string(q).c_str(), e.what());
  }
  return buf;
}

FigureOutput sweep_figure(const PartitionedHamiltonian& h, const std::vector<std::string>& names,
                          const std::vector<Quantity>& fitted, const std::string& path) {
  std::vector<ProductFormula> formulas;
  for (const auto& n : names) formulas.push_back(make_formula(n, h.labels()));
  const auto grid = geometric_grid(1e-1, 1e-3, 13);
  const SweepResult sweep = run_sweep(h, formulas, grid);
  write_sweep_csv(path, sweep.rows);
  FigureOutput out{path, {}};
  for (const auto& n : names) {
    for (Quantity q : fitted) out.summary.push_back(slope_line(sweep, n, q));
  }
  return out;
}

}  // namespace

FigureOutput reproduce_figure(Figure which, Scale scale, const std::string& out_dir) {
  const bool full = scale == Scale::Full;
  const std::string path = join(out_dir, "figure_" + to_string(which) + ".csv");
  switch (which) {
    case Figure::Left: {
      const double step = full ? 0.005 : 0.01;
      std::vector<double> a4 = scan_grid(-1.0, -0.05, step);
      const std::vector<double> upper = scan_grid(1.05, 2.0, step);
      a4.insert(a4.end(), upper.begin(), upper.end());
      const auto points = family_scan(a4);
      std::ofstream csv(path);
      if (!csv) throw UsageError("cannot open '" + path + "' for writing");
      write_family_csv(csv, points);
      std::size_t solved = 0;
      for (const auto& p : points) solved += p.solutions.empty() ? 0 : 1;
      char buf[128];
      std::snprintf(buf, sizeof buf, "family scan: %zu of %zu a4 values solved", solved,
                    points.size());
      return {path, {buf}};
    }
    case Figure::Middle: {
      const auto h = full ? build_xy_lattice(3, 4, 0.25, 0.75) : build_xy_lattice(2, 3, 0.25, 0.75);
      return sweep_figure(h, {"strang", "w2:a4=-0.3"},
                          {Quantity::ExactDeltaE, Quantity::SpectralError}, path);
    }
    case Figure::Right: {
      const auto h = full ? build_random_two_term(9, 50, 7) : build_random_two_term(6, 20, 7);
      return sweep_figure(h, {"w2w2:a4=-0.3", "w2w2p:a4=-0.3"}, {Quantity::ExactDeltaE}, path);
    }
  }
  throw UsageError("unknown figure");
}

}  // namespace trotterbench
