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

// trotterbench: command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 numerical error (or failed claim
// checks), 3 no real solution for the requested a4.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trotterbench/claim.hpp"
#include "trotterbench/designer.hpp"
#include "trotterbench/errors.hpp"
#include "trotterbench/expansion.hpp"
#include "trotterbench/figures.hpp"
#include "trotterbench/formula_spec.hpp"
#include "trotterbench/hamiltonian_spec.hpp"
#include "trotterbench/sweep.hpp"

namespace tb = trotterbench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitNoRealSolution = 3;

// --ham accepts a Hamiltonian file or one of a few presets.
tb::HamiltonianSpec resolve_hamiltonian(const std::string& ham) {
  tb::HamiltonianSpec spec;
  if (ham.empty() || ham == "xy-2x3") return spec;
  if (ham == "xy-3x4") {
    spec.rows = 3;
    spec.cols = 4;
    return spec;
  }
  if (ham == "random-9") {
    spec.kind = "random";
    return spec;
  }
  if (ham == "random-3") {
    spec.kind = "random";
    spec.n_qubits = 3;
    spec.strings_per_term = 6;
    return spec;
  }
  if (!std::filesystem::exists(ham)) {
    throw tb::UsageError("--ham: no such file or preset '" + ham +
                         "' (presets: xy-2x3, xy-3x4, random-3, random-9)");
  }
  return tb::load_hamiltonian_spec(ham);
}

tb::Precision parse_precision(const std::string& p) {
  if (p == "double") return tb::Precision::Double;
  if (p == "extended") return tb::Precision::Extended;
  if (p == "auto") return tb::Precision::Auto;
  throw tb::UsageError("--precision must be double, extended or auto");
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_solution(const tb::SolverSolution& s) {
  std::printf("branch %d  a4 = %s\n", s.branch, fmt17(s.a4).c_str());
  for (int i = 0; i < 5; ++i) std::printf("  a%d = %s\n", i + 1, fmt17(s.a[i]).c_str());
  std::printf("  residuals: first-order %.3e  [A,B] %.3e  equal-coefficients %.3e\n",
              s.residuals[0], s.residuals[1], s.residuals[2]);
}

void print_expansion(const tb::ExponentExpansion& e) {
  for (const auto& [label, c] : e.first_order) {
    std::printf("0  %-20s %+.17g\n", label.c_str(), c);
  }
  for (const auto& [word, c] : e.terms) {
    std::printf("%zu  %-20s %+.17g\n", word.order(), word.to_string().c_str(), c);
  }
}

std::ostream* open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return &std::cout;
  file.open(path);
  if (!file) throw tb::UsageError("cannot open '" + path + "' for writing");
  return &file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmarks Trotter product formulas for energy estimation"};
  app.require_subcommand(1);

  // solve-coeffs
  auto* solve = app.add_subcommand("solve-coeffs", "Solve the W2 coefficients for a given a4");
  double solve_a4 = -0.3;
  int solve_branch = 0;
  bool solve_all = false;
  solve->add_option("--a4", solve_a4, "free coefficient a4")->required();
  solve->add_option("--branch", solve_branch, "solution branch (sorted by a1)");
  solve->add_flag("--all", solve_all, "print every branch");

  // family-scan
  auto* scan = app.add_subcommand("family-scan", "Solve W2 over a grid of a4 values");
  double scan_from = -1.0, scan_to = -0.05, scan_step = 0.01;
  std::string scan_out;
  scan->add_option("--from", scan_from);
  scan->add_option("--to", scan_to);
  scan->add_option("--step", scan_step);
  scan->add_option("--out", scan_out, "CSV path (default stdout)");

  // expand / check
  auto* expand = app.add_subcommand("expand", "Print exponent-expansion coefficients");
  std::string expand_formula = "strang";
  int expand_order = tb::kMaxExpansionOrder;
  expand->add_option("--formula", expand_formula)->required();
  expand->add_option("--order", expand_order, "1..3");

  auto* check = app.add_subcommand("check", "Evaluate the W2 design conditions for a formula");
  std::string check_formula;
  check->add_option("--formula", check_formula)->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Step-size sweep of energy and operator errors");
  std::string ham;
  std::vector<std::string> formulas;
  double s_max = 1e-1, s_min = 1e-3;
  int points = 13;
  std::string target = "lowest";
  std::optional<std::uint64_t> seed;
  std::string sweep_out;
  std::string precision = "auto";
  sweep->add_option("--ham", ham, "Hamiltonian file or preset (xy-2x3, xy-3x4, random-3, random-9)");
  sweep->add_option("--formula", formulas, "formula string, e.g. w2:a4=-0.3 (repeatable)")->required();
  sweep->add_option("--s-max", s_max, "largest step size (default 0.1)");
  sweep->add_option("--s-min", s_min, "smallest step size (default 1e-3)");
  sweep->add_option("--points", points, "geometric grid points, >= 4 (default 13)");
  sweep->add_option("--target", target, "lowest or eigenvalue index");
  sweep->add_option("--seed", seed, "seed for random Hamiltonians");
  sweep->add_option("--out", sweep_out, "CSV path (default stdout)");
  sweep->add_option("--precision", precision, "double, extended or auto");

  // fit
  auto* fit = app.add_subcommand("fit", "Fit log-log slopes to a sweep CSV");
  std::string fit_in;
  std::string fit_formula;
  std::string fit_quantity = "exact_delta_e";
  bool fit_auto = false;
  fit->add_option("--in", fit_in, "sweep CSV")->required();
  fit->add_option("--formula", fit_formula, "restrict to one formula");
  fit->add_option("--quantity", fit_quantity);
  fit->add_flag("--auto-window", fit_auto);

  // verify-claim
  auto* claim = app.add_subcommand("verify-claim",
                                   "Check the third-order error structure of W2");
  tb::ClaimOptions claim_opts;
  std::string claim_control;
  claim->add_option("--a4", claim_opts.a4);
  claim->add_option("--branch", claim_opts.branch);
  claim->add_option("--seed", claim_opts.seed);
  claim->add_option("--qubits", claim_opts.n_qubits);
  claim->add_option("--strings", claim_opts.strings_per_term);
  claim->add_option("--formula", claim_control, "replace W2 by this formula (negative control)");

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Regenerate a figure's data");
  std::string figure;
  bool full_scale = false;
  std::string out_dir = ".";
  repro->add_option("--figure", figure, "left, middle or right")->required();
  repro->add_flag("--paper-scale", full_scale, "full-size lattice and random model (slow)");
  repro->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      if (solve_all) {
        const auto sols = tb::solve_w2_all(solve_a4);
        if (sols.empty()) throw tb::NoRealSolution("no real W2 solution for a4 = " + fmt17(solve_a4));
        for (const auto& s : sols) print_solution(s);
      } else {
        print_solution(tb::solve_w2(solve_a4, solve_branch));
      }
    } else if (*scan) {
      const auto grid = tb::scan_grid(scan_from, scan_to, scan_step);
      std::ofstream file;
      tb::write_family_csv(*open_out(scan_out, file), tb::family_scan(grid));
    } else if (*expand) {
      print_expansion(tb::expand_exponent(tb::make_formula(expand_formula), expand_order));
    } else if (*check) {
      const auto f = tb::make_formula(check_formula);
      const auto r = tb::check_w2_conditions(tb::expand_exponent(f, 2));
      std::printf("first-order         %.3e\n[A,B]               %.3e\n"
                  "equal-coefficients  %.3e\n",
                  r.first_order, r.commutator, r.equal_coefficients);
      if (r.max() > 1e-10) return kExitNumerical;
    } else if (*sweep) {
      tb::SweepConfig cfg;
      cfg.hamiltonian = resolve_hamiltonian(ham);
      cfg.formulas = formulas;
      cfg.s_max = s_max;
      cfg.s_min = s_min;
      cfg.points = points;
      cfg.target = tb::TargetSelector::parse(target);
      cfg.seed = seed;
      cfg.spectro.precision = parse_precision(precision);
      const auto result = tb::run_sweep(cfg);
      std::ofstream file;
      tb::write_sweep_csv(*open_out(sweep_out, file), result.rows);
      std::fprintf(stderr, "hamiltonian %s, %s precision, %zu rows\n",
                   result.hamiltonian_digest.c_str(), tb::to_string(result.precision).c_str(),
                   result.rows.size());
    } else if (*fit) {
      const auto rows = tb::read_sweep_csv(fit_in);
      std::vector<std::string> names;
      for (const auto& r : rows) {
        if ((fit_formula.empty() || r.formula == fit_formula) &&
            std::find(names.begin(), names.end(), r.formula) == names.end()) {
          names.push_back(r.formula);
        }
      }
      if (names.empty()) throw tb::UsageError("no rows for formula '" + fit_formula + "'");
      tb::FitOptions opts;
      opts.auto_window = fit_auto;
      const tb::Quantity q = tb::parse_quantity(fit_quantity);
      for (const auto& n : names) {
        const auto r = tb::fit_rows(rows, n, q, opts);
        std::printf("%s,%s,slope=%.6f,intercept=%.6f,r2=%.6f,s_lo=%.3e,s_hi=%.3e,points=%zu\n",
                    n.c_str(), tb::to_string(q).c_str(), r.slope, r.intercept, r.r_squared,
                    r.s_lo, r.s_hi, r.points_used);
      }
    } else if (*claim) {
      if (!claim_control.empty()) {
        claim_opts.w2_override = tb::make_formula(claim_control);
      }
      const auto report = tb::verify_claim(claim_opts);
      std::fputs(tb::format_claim_report(report).c_str(), stdout);
      return report.passed() ? kExitOk : kExitNumerical;
    } else if (*repro) {
      const auto out = tb::reproduce_figure(
          tb::parse_figure(figure), full_scale ? tb::Scale::Full : tb::Scale::Desk, out_dir);
      std::printf("wrote %s\n", out.csv_path.c_str());
      for (const auto& line : out.summary) std::printf("  %s\n", line.c_str());
    }
  } catch (const tb::NoRealSolution& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNoRealSolution;
  } catch (const tb::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const tb::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}
