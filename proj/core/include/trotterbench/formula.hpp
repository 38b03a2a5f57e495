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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "trotterbench/dense.hpp"
#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {

/// One exponential e^{-i a s H_label}.
struct Stage {
  std::string label;
  double coefficient = 0.0;

  bool operator==(const Stage&) const = default;
};

/// Ordered product of term exponentials, stored in application order:
/// stages()[0] acts first, so the step unitary is
///   W(s) = e^{-i a_q s H_{m_q}} ... e^{-i a_1 s H_{m_1}}
/// with a_1 = stages()[0].
class ProductFormula {
 public:
  ProductFormula() = default;
  ProductFormula(std::string name, std::vector<Stage> stages, int declared_order);

  const std::string& name() const { return name_; }
  const std::vector<Stage>& stages() const { return stages_; }
  int declared_order() const { return declared_order_; }
  std::size_t size() const { return stages_.size(); }
  bool empty() const { return stages_.empty(); }

  /// Sum of stage coefficients per label (the first-order coefficients).
  std::map<std::string, double> label_sums() const;
  /// Sorted distinct labels.
  std::vector<std::string> labels() const;
  /// Every label's coefficients sum to one.
  bool is_consistent(double tol = 1e-12) const;

  /// Same stages with all coefficients multiplied by c.
  ProductFormula scaled(double c) const;
  /// Adjacent stages on the same label folded into one.
  ProductFormula merged() const;
  ProductFormula renamed(std::string name) const;

  bool operator==(const ProductFormula&) const = default;

 private:
  std::string name_;
  std::vector<Stage> stages_;
  int declared_order_ = 1;
};

/// First-order formula, one unit stage per label.
ProductFormula lie_trotter(const std::vector<std::string>& labels);

/// Second-order symmetric splitting, e.g. (A:1/2, B:1, A:1/2).
ProductFormula strang(const std::vector<std::string>& labels);

/// u = 1 / (4 - 4^{1/3}) in S4(s) = S2(us)^2 S2((1-4u)s) S2(us)^2.
double suzuki4_weight();

/// Fourth-order Suzuki recursion on top of strang(), adjacent stages merged
/// (11 stages for two labels).
ProductFormula suzuki4(const std::vector<std::string>& labels);

/// The five-exponential family
///   W2(s) = e^{-iA a1 s} e^{-iB a2 s} e^{-iA a3 s} e^{-iB a4 s} e^{-iA a5 s},
/// i.e. a5 acts first. Throws ConditionViolation unless the design conditions
/// hold to `tol` (checked through the exponent expansion).
ProductFormula custom_w2(const std::array<double, 5>& a, double tol = 1e-8,
                         const std::string& label_a = "A",
                         const std::string& label_b = "B");

/// Same stages in the opposite order, so reverse(f)(s) = f(-s)^dagger.
ProductFormula reverse(const ProductFormula& f);

/// first(c_first s) * second(c_second s): `second` acts first. Fractions
/// must sum to one; the result is merged at the seam.
ProductFormula compose(const ProductFormula& first, double c_first,
                       const ProductFormula& second, double c_second);

/// Caches term matrices and their eigensystems so that step unitaries of any
/// formula cost two matrix products per stage.
template <typename Real>
class TermPropagator {
 public:
  explicit TermPropagator(const PartitionedHamiltonian& h,
                          int max_qubits = kDefaultMaxQubits);

  const PartitionedHamiltonian& hamiltonian() const { return h_; }
  std::size_t dim() const { return h_.dim(); }

  /// W(s) for the given formula.
  CMatrix<Real> step(const ProductFormula& f, double s) const;
  /// e^{-i H s} for the total Hamiltonian.
  CMatrix<Real> exact(double s) const;

  const CMatrix<Real>& term_matrix(std::size_t index) const { return terms_[index]; }
  const CMatrix<Real>& term_matrix(const std::string& label) const;
  const EigSystem<Real>& term_eig(std::size_t index) const { return term_eigs_[index]; }
  const CMatrix<Real>& total_matrix() const { return total_; }
  const EigSystem<Real>& total_eig() const { return total_eig_; }
  /// Largest |eigenvalue| of the term.
  double term_norm(const std::string& label) const;

  /// s * sum_stages |a| ||H_m||, the bound on the step unitary's eigenphases.
  double phase_bound(const ProductFormula& f, double s) const;

 private:
  PartitionedHamiltonian h_;
  std::vector<CMatrix<Real>> terms_;
  std::vector<EigSystem<Real>> term_eigs_;
  CMatrix<Real> total_;
  EigSystem<Real> total_eig_;
};

extern template class TermPropagator<double>;
extern template class TermPropagator<long double>;

/// W(s) in double precision, building term exponentials from scratch.
Matrix step_matrix(const ProductFormula& f, const PartitionedHamiltonian& h, double s);

}  // namespace trotterbench
