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

#include "trotterbench/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>

#include "trotterbench/errors.hpp"
#include "trotterbench/formula_spec.hpp"

namespace trotterbench {

std::vector<double> geometric_grid(double s_max, double s_min, int points) {
  if (!(s_min > 0.0) || !(s_max >= s_min) || !std::isfinite(s_max)) {
    throw UsageError("step grid needs 0 < s_min <= s_max");
  }
  if (points < 1) throw UsageError("step grid needs at least one point");
  if (points == 1) return {s_max};
  std::vector<double> out(static_cast<std::size_t>(points));
  const double ratio = std::log(s_min / s_max) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = s_max * std::exp(ratio * i);
  // Land exactly on the endpoints.
  out.front() = s_max;
  out.back() = s_min;
  return out;
}

std::vector<SweepRow> SweepResult::rows_for(const std::string& formula) const {
  std::vector<SweepRow> out;
  for (const auto& r : rows) {
    if (r.formula == formula) out.push_back(r);
  }
  return out;
}

namespace {

SweepRow failed_row(const std::string& formula, double s, std::string flag) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  SweepRow row;
  row.formula = formula;
  row.report = {s, nan, nan, nan, nan, nan, nan, nan, false};
  row.flag = std::move(flag);
  return row;
}

SweepRow evaluate(const Spectroscope& scope, const ProductFormula& f, double s) {
  try {
    SweepRow row;
    row.formula = f.name();
    row.report = scope.report(f, s);
    row.flag = row.report.weak_match ? "weak-match" : "ok";
    return row;
  } catch (const AliasingError&) {
    return failed_row(f.name(), s, "aliasing");
  } catch (const AmbiguousMatch&) {
    return failed_row(f.name(), s, "ambiguous-match");
  } catch (const NonEigenvectorError&) {
    return failed_row(f.name(), s, "non-eigenvector");
  } catch (const NumericalError&) {
    return failed_row(f.name(), s, "numerical");
  }
}

}  // namespace

SweepResult run_sweep(const PartitionedHamiltonian& h, std::span<const ProductFormula> formulas,
                      std::span<const double> s_values, TargetSelector target,
                      SpectroOptions opts, unsigned threads) {
  for (const auto& f : formulas) {
    if (f.name().find_first_of("\"\n") != std::string::npos) {
      throw UsageError("formula name '" + f.name() + "' cannot be written to CSV");
    }
  }
  const Spectroscope scope(h, target, opts);
  SweepResult result;
  result.hamiltonian_digest = h.digest();
  result.precision = scope.precision();

  const std::size_t total = formulas.size() * s_values.size();
  result.rows.resize(total);
  auto task = [&](std::size_t i) {
    const auto& f = formulas[i / s_values.size()];
    result.rows[i] = evaluate(scope, f, s_values[i % s_values.size()]);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) task(i);
    return result;
  }
  // Rows are written by index, so output order never depends on scheduling.
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) task(i);
    });
  }
  pool.clear();
  return result;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.points < 4) throw UsageError("a sweep needs at least 4 step sizes");
  if (cfg.formulas.empty()) throw UsageError("a sweep needs at least one formula");
  HamiltonianSpec hs = cfg.hamiltonian;
  if (cfg.seed) hs.seed = *cfg.seed;
  const PartitionedHamiltonian h = build_hamiltonian(hs);
  std::vector<ProductFormula> formulas;
  for (const auto& text : cfg.formulas) formulas.push_back(make_formula(text, h.labels()));
  const auto grid = geometric_grid(cfg.s_max, cfg.s_min, cfg.points);
  return run_sweep(h, formulas, grid, cfg.target, cfg.spectro, cfg.threads);
}

Quantity parse_quantity(const std::string& name) {
  for (Quantity q : {Quantity::ExactDeltaE, Quantity::SpectralError, Quantity::FirstOrderShift,
                     Quantity::PredictedDeltaE, Quantity::OverlapDeficiency,
                     Quantity::PredictionError}) {
    if (to_string(q) == name) return q;
  }
  throw UsageError("unknown quantity '" + name + "'");
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::ExactDeltaE: return "exact_delta_e";
    case Quantity::SpectralError: return "spectral_error";
    case Quantity::FirstOrderShift: return "first_order_shift";
    case Quantity::PredictedDeltaE: return "predicted_delta_e";
    case Quantity::OverlapDeficiency: return "overlap_deficiency";
    case Quantity::PredictionError: return "prediction_error";
  }
  return "exact_delta_e";
}

double quantity_of(const SpectroReport& r, Quantity q) {
  switch (q) {
    case Quantity::ExactDeltaE: return r.exact_delta_e;
    case Quantity::SpectralError: return r.spectral_error;
    case Quantity::FirstOrderShift: return r.first_order_shift;
    case Quantity::PredictedDeltaE: return r.predicted_delta_e;
    case Quantity::OverlapDeficiency: return r.overlap_deficiency;
    case Quantity::PredictionError: return r.predicted_delta_e - r.exact_delta_e;
  }
  return r.exact_delta_e;
}

FitResult fit_rows(std::span<const SweepRow> rows, const std::string& formula, Quantity q,
                   const FitOptions& opts) {
  std::vector<double> s, y;
  for (const auto& row : rows) {
    if (row.formula != formula || !row.ok()) continue;
    s.push_back(row.report.s);
    y.push_back(quantity_of(row.report, q));
  }
  return fit_slope(s, y, opts);
}

// ---------------------------------------------------------------------------
// CSV

namespace {

constexpr const char* kHeader =
    "formula,s,exact_delta_e,spectral_error,first_order_shift,predicted_delta_e,"
    "overlap_deficiency,gap,matched_overlap,flag";

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw UsageError("sweep CSV: unterminated quote");
  return out;
}

double parse_double(const std::string& text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw UsageError("sweep CSV: bad number '" + text + "'");
  }
  return v;
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kHeader << '\n';
  for (const auto& row : rows) {
    const SpectroReport& r = row.report;
    out << quote(row.formula) << ',' << format_double(r.s) << ','
        << format_double(r.exact_delta_e) << ',' << format_double(r.spectral_error) << ','
        << format_double(r.first_order_shift) << ',' << format_double(r.predicted_delta_e)
        << ',' << format_double(r.overlap_deficiency) << ',' << format_double(r.gap) << ','
        << format_double(r.matched_overlap) << ',' << quote(row.flag) << '\n';
  }
}

void write_sweep_csv(const std::string& path, std::span<const SweepRow> rows) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  write_sweep_csv(out, rows);
  if (!out) throw UsageError("failed writing '" + path + "'");
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw UsageError("sweep CSV: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 10) {
      throw UsageError("sweep CSV: expected 10 fields, got " + std::to_string(f.size()));
    }
    SweepRow row;
    row.formula = f[0];
    SpectroReport& r = row.report;
    r.s = parse_double(f[1]);
    r.exact_delta_e = parse_double(f[2]);
    r.spectral_error = parse_double(f[3]);
    r.first_order_shift = parse_double(f[4]);
    r.predicted_delta_e = parse_double(f[5]);
    r.overlap_deficiency = parse_double(f[6]);
    r.gap = parse_double(f[7]);
    r.matched_overlap = parse_double(f[8]);
    row.flag = f[9];
    r.weak_match = row.flag == "weak-match";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> read_sweep_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_sweep_csv(in);
}

}  // namespace trotterbench
