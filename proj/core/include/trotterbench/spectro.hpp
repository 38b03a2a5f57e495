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

// Effective-Hamiltonian spectroscopy. For a step unitary W(s) the effective
// Hamiltonian is the principal (i/s) log W(s); its eigenpair with the largest
// overlap on the exact target eigenvector gives the energy-estimation error
// delta E = E~(s) - E that any phase-estimation routine inherits.

#include <cstddef>
#include <memory>
#include <string>

#include "trotterbench/dense.hpp"
#include "trotterbench/formula.hpp"
#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {

/// Which eigenpair of H to track: the lowest, or the k-th in ascending order.
struct TargetSelector {
  std::size_t index = 0;

  static TargetSelector lowest() { return {}; }
  static TargetSelector at(std::size_t k) { return {k}; }
  /// "lowest" or a non-negative integer.
  static TargetSelector parse(const std::string& text);
  std::string to_string() const;
};

struct Eigenpair {
  double energy = 0.0;
  Vector state;
  double gap = 0.0;  // distance to the rest of the spectrum
  std::size_t index = 0;
};

inline constexpr double kDegeneracyTol = 1e-10;

/// Throws DegenerateTarget when the gap is below kDegeneracyTol.
Eigenpair exact_eigenpair(const PartitionedHamiltonian& h,
                          TargetSelector which = TargetSelector::lowest());

struct SpectroReport {
  double s = 0.0;
  double exact_delta_e = 0.0;
  double spectral_error = 0.0;
  double first_order_shift = 0.0;
  double predicted_delta_e = 0.0;
  double overlap_deficiency = 0.0;
  double gap = 0.0;
  double matched_overlap = 0.0;
  bool weak_match = false;
};

struct SpectroOptions {
  Precision precision = Precision::Auto;
  bool predict = true;  // evaluate the perturbative prediction
  double weak_match_below = 0.9;
  double ambiguous_below = 0.5;
  int max_qubits = kDefaultMaxQubits;
};

namespace detail {
template <typename Real>
class SpectroCore;
}  // namespace detail

/// Holds the term eigensystems and the exact target for one Hamiltonian; every
/// query is const and may run concurrently.
class Spectroscope {
 public:
  Spectroscope(const PartitionedHamiltonian& h, TargetSelector target = {},
               SpectroOptions opts = {});
  ~Spectroscope();
  Spectroscope(const Spectroscope&);
  Spectroscope& operator=(const Spectroscope&);
  Spectroscope(Spectroscope&&) noexcept;
  Spectroscope& operator=(Spectroscope&&) noexcept;

  Precision precision() const;
  const SpectroOptions& options() const { return opts_; }
  const PartitionedHamiltonian& hamiltonian() const;
  const Eigenpair& target() const { return target_; }

  /// Full report. Throws AliasingError when s * sum |a| ||H_m|| >= pi and
  /// AmbiguousMatch when the best overlap drops below 0.5.
  SpectroReport report(const ProductFormula& f, double s) const;

  double spectral_error(const ProductFormula& f, double s) const;
  Matrix step(const ProductFormula& f, double s) const;
  Matrix effective_hamiltonian(const ProductFormula& f, double s) const;

 private:
  SpectroOptions opts_;
  Eigenpair target_;
  std::shared_ptr<const detail::SpectroCore<double>> double_core_;
  std::shared_ptr<const detail::SpectroCore<long double>> extended_core_;
};

SpectroReport delta_e_exact(const ProductFormula& f, const PartitionedHamiltonian& h, double s,
                            TargetSelector target = {}, SpectroOptions opts = {});
double spectral_error(const ProductFormula& f, const PartitionedHamiltonian& h, double s,
                      Precision precision = Precision::Auto);
double first_order_shift(const ProductFormula& f, const PartitionedHamiltonian& h, double s,
                         TargetSelector target = {}, SpectroOptions opts = {});
double overlap_deficiency(const ProductFormula& f, const PartitionedHamiltonian& h, double s,
                          TargetSelector target = {}, SpectroOptions opts = {});

}  // namespace trotterbench
