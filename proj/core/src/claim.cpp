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

#include "trotterbench/claim.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "trotterbench/designer.hpp"
#include "trotterbench/errors.hpp"
#include "trotterbench/spectro.hpp"
#include "trotterbench/sweep.hpp"

namespace trotterbench {

bool ClaimReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

PartitionedHamiltonian claim_hamiltonian(const ClaimOptions& opts) {
  return build_random_two_term(opts.n_qubits, opts.strings_per_term, opts.seed);
}

namespace {

using cdouble = std::complex<double>;

template <typename Real>
std::complex<Real> frobenius(const CMatrix<Real>& x, const CMatrix<Real>& y) {
  return (x.adjoint() * y).trace();  // <x, y>
}

// Operator-level part of the claim: residuals of W - e^{-iHs} against
// alpha3 s^3 C with C = [H,[H,B]].
template <typename Real>
struct OperatorResiduals {
  const TermPropagator<Real>& prop;
  CMatrix<Real> c;  // [H,[H,B]]
  CMatrix<Real> d;  // [H,C]

  OperatorResiduals(const TermPropagator<Real>& p, const std::string& label_b) : prop(p) {
    const CMatrix<Real>& h = prop.total_matrix();
    c = commutator<Real>(h, commutator<Real>(h, prop.term_matrix(label_b)));
    d = commutator<Real>(h, c);
    if (!(max_abs<Real>(c) > Real(1e-12))) {
      throw ConditionViolation("[H,[H,B]] vanishes; the claim is vacuous for commuting terms");
    }
  }

  CMatrix<Real> xi(const ProductFormula& f, double s) const {
    return prop.step(f, s) - prop.exact(s);
  }

  cdouble alpha3(const ProductFormula& f, double s) const {
    const std::complex<Real> a = frobenius<Real>(c, xi(f, s)) / frobenius<Real>(c, c);
    const Real s3 = static_cast<Real>(s) * static_cast<Real>(s) * static_cast<Real>(s);
    return {static_cast<double>(a.real() / s3), static_cast<double>(a.imag() / s3)};
  }

  // Joint fit of Xi(s)/s^3 = alpha3 C + alpha4 s D at s and 2 s.
  std::pair<cdouble, cdouble> alpha34(const ProductFormula& f, double s) const {
    using C = std::complex<Real>;
    const Real s1 = static_cast<Real>(s), s2 = Real(2) * s1;
    const CMatrix<Real> y1 = xi(f, s) / (s1 * s1 * s1);
    const CMatrix<Real> y2 = xi(f, 2 * s) / (s2 * s2 * s2);
    // Normal equations on the stacked design [C C; s1 D s2 D].
    const C cc = Real(2) * frobenius<Real>(c, c);
    const C cd = (s1 + s2) * frobenius<Real>(c, d);
    const C dd = (s1 * s1 + s2 * s2) * frobenius<Real>(d, d);
    const C cy = frobenius<Real>(c, y1) + frobenius<Real>(c, y2);
    const C dy = s1 * frobenius<Real>(d, y1) + s2 * frobenius<Real>(d, y2);
    const C det = cc * dd - cd * std::conj(cd);
    const C a3 = (dd * cy - cd * dy) / det;
    const C a4 = (cc * dy - std::conj(cd) * cy) / det;
    auto cast = [](C z) { return cdouble(static_cast<double>(z.real()), static_cast<double>(z.imag())); };
    return {cast(a3), cast(a4)};
  }

  FitResult residual_fit(const ProductFormula& f, cdouble a3, std::span<const double> grid) const {
    const std::complex<Real> alpha(static_cast<Real>(a3.real()), static_cast<Real>(a3.imag()));
    std::vector<double> y;
    for (double s : grid) {
      const Real sr = static_cast<Real>(s);
      const CMatrix<Real> r = xi(f, s) - (alpha * (sr * sr * sr)) * c;
      y.push_back(static_cast<double>(spectral_norm<Real>(r)));
    }
    return fit_slope(grid, y);
  }
};

template <typename Real>
void operator_part(ClaimReport& out, const ProductFormula& w2, const ProductFormula& w2r,
                   const ProductFormula& comp, const PartitionedHamiltonian& h,
                   const ClaimOptions& opts) {
  const TermPropagator<Real> prop(h);
  const OperatorResiduals<Real> res(prop, h.labels()[1]);
  const auto grid = geometric_grid(opts.residual_s_max, opts.residual_s_min, opts.residual_points);
  const double s0 = opts.residual_s_min;

  out.alpha3 = res.alpha3(w2, s0);
  out.alpha3_reversed = res.alpha3(w2r, s0);
  out.residual_fit = res.residual_fit(w2, out.alpha3, grid);
  out.residual_reversed_fit = res.residual_fit(w2r, out.alpha3_reversed, grid);

  const auto [a3c, a4c] = res.alpha34(comp, s0);
  out.alpha4_composite = a4c;
  out.alpha3_composite = res.alpha3(comp, s0);
  out.composite_residual_fit = res.residual_fit(comp, out.alpha3_composite, grid);
  (void)a3c;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

}  // namespace

ClaimReport verify_claim(const ClaimOptions& opts) {
  const PartitionedHamiltonian h = claim_hamiltonian(opts);
  if (opts.w2_override) return verify_claim(*opts.w2_override, h, opts);
  const SolverSolution sol = solve_w2(opts.a4, opts.branch);
  const auto labels = h.labels();
  ProductFormula w2 = custom_w2(sol.a, 1e-8, labels[0], labels[1]);
  return verify_claim(w2, h, opts);
}

ClaimReport verify_claim(double a4, std::uint64_t seed, int n_qubits) {
  ClaimOptions opts;
  opts.a4 = a4;
  opts.seed = seed;
  opts.n_qubits = n_qubits;
  return verify_claim(opts);
}

ClaimReport verify_claim(const ProductFormula& w2, const PartitionedHamiltonian& h,
                         const ClaimOptions& opts) {
  if (h.term_count() != 2) {
    throw LabelError("claim verification needs a two-term Hamiltonian");
  }
  ClaimReport out;
  out.formula = w2.name();
  out.hamiltonian_digest = h.digest();
  out.precision = resolve_precision(opts.precision, h.dim());

  const ProductFormula w2r = reverse(w2);
  const ProductFormula comp = compose(w2, 0.5, w2r, 0.5).renamed("composite");
  const ProductFormula w2w2 = compose(w2, 0.5, w2, 0.5).renamed("w2w2");

  if (out.precision == Precision::Extended) {
    operator_part<long double>(out, w2, w2r, comp, h, opts);
  } else {
    operator_part<double>(out, w2, w2r, comp, h, opts);
  }

  // Energy errors on the ground state.
  SpectroOptions sopts;
  sopts.precision = out.precision;
  sopts.predict = false;
  const std::vector<ProductFormula> formulas = {w2.renamed("w2"), comp, w2w2};
  const auto grid = geometric_grid(opts.delta_s_max, opts.delta_s_min, opts.delta_points);
  const SweepResult sweep = run_sweep(h, formulas, grid, TargetSelector::lowest(), sopts);
  FitOptions auto_fit;
  auto_fit.auto_window = true;
  out.w2_delta_fit = fit_rows(sweep.rows, "w2", Quantity::ExactDeltaE, auto_fit);
  out.composite_delta_fit = fit_rows(sweep.rows, "composite", Quantity::ExactDeltaE, auto_fit);
  out.w2w2_delta_fit = fit_rows(sweep.rows, "w2w2", Quantity::ExactDeltaE, auto_fit);
  for (const auto& row : sweep.rows) {
    if (row.report.s != opts.delta_s_min) continue;
    if (row.formula == "composite") out.composite_delta_at_min = std::abs(row.report.exact_delta_e);
    if (row.formula == "w2w2") out.w2w2_delta_at_min = std::abs(row.report.exact_delta_e);
  }

  const double a3 = std::abs(out.alpha3);
  out.checks.push_back({"a", "alpha3 fitted at s_min is finite and nonzero", a3,
                        std::isfinite(a3) && a3 > 1e-12});
  out.checks.push_back({"b", "W2 residual minus alpha3 s^3 [H,[H,B]] has slope >= 3.8",
                        out.residual_fit.slope, out.residual_fit.slope >= 3.8});
  const double ws = out.w2_delta_fit.slope;
  const double cs = out.composite_delta_fit.slope;
  out.checks.push_back({"c", "W2 delta E slope >= 2.8 and composite slope in 4.0 +- 0.2",
                        ws,
                        ws >= 2.8 && std::abs(cs - 4.0) <= 0.2});
  out.checks.push_back({"d", "composite residual minus its alpha3 term has slope >= 3.8",
                        out.composite_residual_fit.slope,
                        out.composite_residual_fit.slope >= 3.8});
  return out;
}

std::string format_claim_report(const ClaimReport& r) {
  std::ostringstream os;
  os << "formula            " << r.formula << '\n'
     << "hamiltonian        " << r.hamiltonian_digest << " (" << to_string(r.precision)
     << ")\n"
     << fmt("alpha3 (W2)        %+.6e %+.6ei\n", r.alpha3.real(), r.alpha3.imag())
     << fmt("alpha3 (W2')       %+.6e %+.6ei\n", r.alpha3_reversed.real(),
            r.alpha3_reversed.imag())
     << fmt("alpha3 (composite) %+.6e %+.6ei\n", r.alpha3_composite.real(),
            r.alpha3_composite.imag())
     << fmt("alpha4 (composite) %+.6e %+.6ei\n", r.alpha4_composite.real(),
            r.alpha4_composite.imag())
     << fmt("residual slope     W2 %.3f  W2' ", r.residual_fit.slope)
     << fmt("%.3f  composite ", r.residual_reversed_fit.slope)
     << fmt("%.3f\n", r.composite_residual_fit.slope)
     << fmt("delta E slope      W2 %.3f  composite ", r.w2_delta_fit.slope)
     << fmt("%.3f  W2W2 ", r.composite_delta_fit.slope)
     << fmt("%.3f\n", r.w2w2_delta_fit.slope)
     << fmt("|delta E| at s_min composite %.3e  W2W2 %.3e\n", r.composite_delta_at_min,
            r.w2w2_delta_at_min);
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS" : "FAIL") << " (" << c.id << ") " << c.description
       << fmt(" [%.6g]\n", c.value);
  }
  return os.str();
}

}  // namespace trotterbench
