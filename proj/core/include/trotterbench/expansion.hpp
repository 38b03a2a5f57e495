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

// Nested-commutator expansion of the exponent operator. Writing a product
// formula as a time-ordered exponential W(s) = T exp(-i int_0^s F), with
// F(sigma) = i W'(sigma) W(sigma)^dagger, gives
//
//   F(sigma) = sum_nu a_nu H_nu
//            + sum_{l>=1} (-i sigma)^l sum_{nu_l>=...>=nu_1>nu}
//                  f_{nu_l..nu_1,nu} [H_{nu_l}, ... [H_{nu_1}, H_nu]...]
//
// over stage positions (position 1 acts first), where f is the product of
// the stage coefficients divided by the factorial of each run of repeated
// indices. The exponent operator is E(sigma) = F(sigma) - H.

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "trotterbench/dense.hpp"
#include "trotterbench/formula.hpp"
#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {

inline constexpr int kMaxExpansionOrder = 3;

/// Right-nested commutator [w_l, ... [w_1, w_0]...], letters stored outermost
/// first. Canonical words have a strictly ordered innermost pair.
struct CommutatorWord {
  std::vector<std::string> letters;

  std::size_t order() const { return letters.empty() ? 0 : letters.size() - 1; }
  std::string to_string() const;

  bool operator==(const CommutatorWord&) const = default;
};

/// Orders by commutator order first, then lexicographically.
struct WordOrder {
  bool operator()(const CommutatorWord& x, const CommutatorWord& y) const;
};

/// Brings the innermost pair into lexicographic order. Returns the sign picked
/// up (+1 or -1), or 0 when the word vanishes ([X, X] innermost).
int canonicalize(CommutatorWord& w);

/// Truncated expansion of F(sigma). Stored coefficients are the real f-values;
/// the (-i sigma)^l prefactors are implied by each word's order.
struct ExponentExpansion {
  int max_order = 0;
  std::map<std::string, double> first_order;
  std::map<CommutatorWord, double, WordOrder> terms;

  /// Zero for words that do not appear. The word is canonicalized first.
  double coefficient(CommutatorWord w) const;
  std::vector<std::string> labels() const;
};

ExponentExpansion expand_exponent(const ProductFormula& f, int max_order = kMaxExpansionOrder);

/// Residuals of the three W2 design conditions for a two-label expansion with
/// labels X < Y:
///   first_order        max(|f_X - 1|, |f_Y - 1|)
///   commutator         |f_{[X,Y]}|                    (sigma^1)
///   equal_coefficients |f_{[X,[X,Y]]} - f_{[Y,[X,Y]]}| (sigma^2)
struct ConditionReport {
  double first_order = 0.0;
  double commutator = 0.0;
  double equal_coefficients = 0.0;

  double max() const;
};

ConditionReport check_w2_conditions(const ExponentExpansion& e);

/// Matrix-valued evaluation of an expansion on a concrete Hamiltonian.
class ExpansionEvaluator {
 public:
  ExpansionEvaluator(ExponentExpansion e, const PartitionedHamiltonian& h,
                     int max_qubits = kDefaultMaxQubits);

  const ExponentExpansion& expansion() const { return e_; }

  /// Truncated E(sigma), including any (f_X - 1) H_X offset.
  Matrix exponent(double sigma) const;
  /// H + (1/s) int_0^s E, integrated termwise.
  Matrix magnus_h1(double s) const;
  /// (1/s) int_0^s <psi|E(sigma)|psi> d sigma for an eigenvector psi of H.
  double predicted_delta_e(const Vector& psi, double s) const;

 private:
  Matrix word_matrix(const CommutatorWord& w) const;
  /// weights[0] * sum_X (f_X - 1) H_X + sum_l weights[l] sum_w f_w N_w.
  Matrix weighted_sum(
      const std::array<std::complex<double>, kMaxExpansionOrder + 1>& weights) const;

  ExponentExpansion e_;
  std::vector<std::string> labels_;
  std::vector<Matrix> terms_;
  Matrix total_;
};

Matrix exponent_matrix(const ExponentExpansion& e, const PartitionedHamiltonian& h,
                       double sigma);
Matrix magnus_h1(const ExponentExpansion& e, const PartitionedHamiltonian& h, double s);
double predicted_delta_e(const ExponentExpansion& e, const PartitionedHamiltonian& h,
                         const Vector& psi, double s);

}  // namespace trotterbench
