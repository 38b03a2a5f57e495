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

#include "trotterbench/spectro.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "trotterbench/errors.hpp"
#include "trotterbench/expansion.hpp"

namespace trotterbench {

TargetSelector TargetSelector::parse(const std::string& text) {
  if (text == "lowest") return lowest();
  std::size_t k = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, k);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("target must be 'lowest' or a non-negative index, got '" + text + "'");
  }
  return at(k);
}

std::string TargetSelector::to_string() const {
  return index == 0 ? std::string("lowest") : std::to_string(index);
}

namespace {

template <typename Real>
std::size_t checked_target(const EigSystem<Real>& es, TargetSelector which) {
  const auto n = static_cast<std::size_t>(es.size());
  if (which.index >= n) {
    throw UsageError("target index " + std::to_string(which.index) +
                     " out of range for dimension " + std::to_string(n));
  }
  const auto gap = static_cast<double>(es.gap_at(static_cast<Eigen::Index>(which.index)));
  if (gap < kDegeneracyTol) {
    throw DegenerateTarget("target eigenvalue " + std::to_string(which.index) +
                           " is degenerate (gap " + std::to_string(gap) + ")");
  }
  return which.index;
}

}  // namespace

Eigenpair exact_eigenpair(const PartitionedHamiltonian& h, TargetSelector which) {
  const EigSystem<double> es = eig_hermitian<double>(total_dense<double>(h));
  const std::size_t k = checked_target(es, which);
  const auto col = static_cast<Eigen::Index>(k);
  return {es.values[col], es.vectors.col(col), es.gap_at(col), k};
}

namespace detail {

template <typename Real>
class SpectroCore {
 public:
  SpectroCore(const PartitionedHamiltonian& h, TargetSelector which, int max_qubits)
      : prop_(h, max_qubits) {
    const EigSystem<Real>& es = prop_.total_eig();
    const auto col = static_cast<Eigen::Index>(checked_target(es, which));
    energy_ = es.values[col];
    psi_ = es.vectors.col(col);
    target_.index = which.index;
    target_.energy = static_cast<double>(energy_);
    target_.state = precision_cast<double>(psi_);
    target_.gap = static_cast<double>(es.gap_at(col));
  }

  const TermPropagator<Real>& propagator() const { return prop_; }
  const Eigenpair& target() const { return target_; }

  void guard(const ProductFormula& f, double s) const {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw UsageError("step size must be positive and finite");
    }
    const double bound = prop_.phase_bound(f, s);
    if (!(bound < std::numbers::pi)) {
      throw AliasingError("formula '" + f.name() + "' at s = " + std::to_string(s) +
                          ": phase bound " + std::to_string(bound) + " >= pi");
    }
  }

  SpectroReport report(const ProductFormula& f, double s, const SpectroOptions& opts) const {
    guard(f, s);
    const CMatrix<Real> w = prop_.step(f, s);
    const CMatrix<Real> u = prop_.exact(s);

    SpectroReport r;
    r.s = s;
    r.gap = target_.gap;
    r.spectral_error = static_cast<double>(spectral_norm<Real>(CMatrix<Real>(w - u)));

    const UnitaryPhases<Real> up = unitary_phases<Real>(w);
    const CVector<Real> amps = up.vectors.adjoint() * psi_;
    const RVector<Real> weights = amps.cwiseAbs2();
    Eigen::Index best = 0;
    weights.maxCoeff(&best);

    const Real overlap = std::sqrt(weights[best]);
    r.matched_overlap = static_cast<double>(overlap);
    if (r.matched_overlap < opts.ambiguous_below) {
      throw AmbiguousMatch("best overlap " + std::to_string(r.matched_overlap) +
                           " below " + std::to_string(opts.ambiguous_below));
    }
    r.weak_match = r.matched_overlap < opts.weak_match_below;

    const Real sr = static_cast<Real>(s);
    r.exact_delta_e = static_cast<double>(up.phases[best] / sr - energy_);

    // Sum the small weights directly rather than 1 - |<v|psi>|^2, which
    // cancels catastrophically when the match is nearly perfect.
    Real rest = 0;
    Real mean = 0;
    for (Eigen::Index k = 0; k < weights.size(); ++k) {
      if (k != best) rest += weights[k];
      mean += weights[k] * (up.phases[k] / sr - energy_);
    }
    r.overlap_deficiency = static_cast<double>(std::sqrt(rest));
    r.first_order_shift = static_cast<double>(mean / weights.sum());

    if (opts.predict) {
      const ExpansionEvaluator ev(expand_exponent(f, kMaxExpansionOrder),
                                  prop_.hamiltonian(), opts.max_qubits);
      r.predicted_delta_e = ev.predicted_delta_e(target_.state, s);
    } else {
      r.predicted_delta_e = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
  }

  double spectral_error(const ProductFormula& f, double s) const {
    if (!(s >= 0.0)) throw UsageError("step size must be non-negative");
    return static_cast<double>(
        spectral_norm<Real>(CMatrix<Real>(prop_.step(f, s) - prop_.exact(s))));
  }

  Matrix effective_hamiltonian(const ProductFormula& f, double s) const {
    guard(f, s);
    return precision_cast<double>(
        logm_unitary<Real>(prop_.step(f, s), static_cast<Real>(s)));
  }

 private:
  TermPropagator<Real> prop_;
  Real energy_ = 0;
  CVector<Real> psi_;
  Eigenpair target_;
};

}  // namespace detail

Spectroscope::Spectroscope(const PartitionedHamiltonian& h, TargetSelector target,
                           SpectroOptions opts)
    : opts_(opts) {
  if (static_cast<int>(h.qubit_count()) > opts_.max_qubits) {
    throw DimensionError("Hamiltonian has " + std::to_string(h.qubit_count()) +
                         " qubits, above the limit of " + std::to_string(opts_.max_qubits));
  }
  opts_.precision = resolve_precision(opts_.precision, h.dim());
  if (opts_.precision == Precision::Extended) {
    extended_core_ =
        std::make_shared<detail::SpectroCore<long double>>(h, target, opts_.max_qubits);
    target_ = extended_core_->target();
  } else {
    double_core_ = std::make_shared<detail::SpectroCore<double>>(h, target, opts_.max_qubits);
    target_ = double_core_->target();
  }
}

Spectroscope::~Spectroscope() = default;
Spectroscope::Spectroscope(const Spectroscope&) = default;
Spectroscope& Spectroscope::operator=(const Spectroscope&) = default;
Spectroscope::Spectroscope(Spectroscope&&) noexcept = default;
Spectroscope& Spectroscope::operator=(Spectroscope&&) noexcept = default;

Precision Spectroscope::precision() const { return opts_.precision; }

const PartitionedHamiltonian& Spectroscope::hamiltonian() const {
  return double_core_ ? double_core_->propagator().hamiltonian()
                      : extended_core_->propagator().hamiltonian();
}

SpectroReport Spectroscope::report(const ProductFormula& f, double s) const {
  return double_core_ ? double_core_->report(f, s, opts_) : extended_core_->report(f, s, opts_);
}

double Spectroscope::spectral_error(const ProductFormula& f, double s) const {
  return double_core_ ? double_core_->spectral_error(f, s)
                      : extended_core_->spectral_error(f, s);
}

Matrix Spectroscope::step(const ProductFormula& f, double s) const {
  return double_core_ ? double_core_->propagator().step(f, s)
                      : precision_cast<double>(extended_core_->propagator().step(f, s));
}

Matrix Spectroscope::effective_hamiltonian(const ProductFormula& f, double s) const {
  return double_core_ ? double_core_->effective_hamiltonian(f, s)
                      : extended_core_->effective_hamiltonian(f, s);
}

SpectroReport delta_e_exact(const ProductFormula& f, const PartitionedHamiltonian& h, double s,
                            TargetSelector target, SpectroOptions opts) {
  return Spectroscope(h, target, opts).report(f, s);
}

double spectral_error(const ProductFormula& f, const PartitionedHamiltonian& h, double s,
                      Precision precision) {
  if (resolve_precision(precision, h.dim()) == Precision::Extended) {
    const TermPropagator<long double> prop(h);
    return static_cast<double>(spectral_norm<long double>(
        ExtMatrix(prop.step(f, s) - prop.exact(s))));
  }
  const TermPropagator<double> prop(h);
  return spectral_norm<double>(Matrix(prop.step(f, s) - prop.exact(s)));
}

double first_order_shift(const ProductFormula& f, const PartitionedHamiltonian& h, double s,
                         TargetSelector target, SpectroOptions opts) {
  opts.predict = false;
  return Spectroscope(h, target, opts).report(f, s).first_order_shift;
}

double overlap_deficiency(const ProductFormula& f, const PartitionedHamiltonian& h, double s,
                          TargetSelector target, SpectroOptions opts) {
  opts.predict = false;
  return Spectroscope(h, target, opts).report(f, s).overlap_deficiency;
}

}  // namespace trotterbench
