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

// Numerical check that a designed second-order formula W2 leaves a
// third-order error confined to a single nested commutator,
//
//   W2(s) - e^{-iHs} = alpha3 s^3 [H,[H,B]] + O(s^4),
//
// so that alternating W2 with its reversal, W2(s/2) W2'(s/2), estimates
// energies to fourth order even though it is only a second-order formula.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trotterbench/dense.hpp"
#include "trotterbench/fit.hpp"
#include "trotterbench/formula.hpp"
#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {

struct ClaimOptions {
  // Random two-term Hamiltonian the claim is checked on.
  int n_qubits = 3;
  int strings_per_term = 6;
  std::uint64_t seed = 7;

  double a4 = -0.3;
  int branch = 0;

  // Operator-residual window; alpha3 is fitted at residual_s_min.
  double residual_s_min = 1e-3;
  double residual_s_max = 1e-2;
  int residual_points = 7;

  // Energy-error sweep, fitted with an automatic window.
  double delta_s_max = 1e-1;
  double delta_s_min = 1e-3;
  int delta_points = 13;

  Precision precision = Precision::Auto;

  // Replaces the designed W2 (negative controls).
  std::optional<ProductFormula> w2_override;
};

struct ClaimCheck {
  std::string id;  // "a".."d"
  std::string description;
  double value = 0.0;
  bool passed = false;
};

struct ClaimReport {
  std::string formula;
  std::string hamiltonian_digest;
  Precision precision = Precision::Double;

  std::complex<double> alpha3;            // W2
  std::complex<double> alpha3_reversed;   // W2'
  std::complex<double> alpha3_composite;  // W2(s/2) W2'(s/2)
  std::complex<double> alpha4_composite;  // joint fit with alpha3_composite

  FitResult residual_fit;            // ||W2 - e^{-iHs} - alpha3 s^3 C||
  FitResult residual_reversed_fit;   // same for W2'
  FitResult composite_residual_fit;  // composite with its own alpha3
  FitResult w2_delta_fit;
  FitResult composite_delta_fit;
  FitResult w2w2_delta_fit;

  double composite_delta_at_min = 0.0;  // |delta E| at delta_s_min
  double w2w2_delta_at_min = 0.0;

  std::vector<ClaimCheck> checks;

  bool passed() const;
};

/// The Hamiltonian the default claim runs on.
PartitionedHamiltonian claim_hamiltonian(const ClaimOptions& opts);

ClaimReport verify_claim(const ClaimOptions& opts = {});
ClaimReport verify_claim(double a4, std::uint64_t seed, int n_qubits);
/// Runs the checks for an explicit W2 on an explicit two-term Hamiltonian.
ClaimReport verify_claim(const ProductFormula& w2, const PartitionedHamiltonian& h,
                         const ClaimOptions& opts = {});

std::string format_claim_report(const ClaimReport& r);

}  // namespace trotterbench
