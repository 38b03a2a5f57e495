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

#include "trotterbench/formula.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "trotterbench/expansion.hpp"

namespace trotterbench {

namespace {

std::string short_number(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

void require_labels(const std::vector<std::string>& labels, std::size_t minimum,
                    const char* who) {
  if (labels.size() < minimum) {
    throw UsageError(std::string(who) + ": needs at least " + std::to_string(minimum) +
                     " label(s)");
  }
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != labels.size()) {
    throw UsageError(std::string(who) + ": labels must be distinct");
  }
}

}  // namespace

ProductFormula::ProductFormula(std::string name, std::vector<Stage> stages,
                               int declared_order)
    : name_(std::move(name)), stages_(std::move(stages)), declared_order_(declared_order) {
  if (declared_order_ < 1) throw UsageError("declared order must be positive");
  for (const auto& st : stages_) {
    if (st.label.empty()) throw UsageError("stage label must be non-empty");
    if (!std::isfinite(st.coefficient)) throw UsageError("stage coefficient must be finite");
  }
}

std::map<std::string, double> ProductFormula::label_sums() const {
  std::map<std::string, double> sums;
  for (const auto& st : stages_) sums[st.label] += st.coefficient;
  return sums;
}

std::vector<std::string> ProductFormula::labels() const {
  std::set<std::string> unique;
  for (const auto& st : stages_) unique.insert(st.label);
  return {unique.begin(), unique.end()};
}

bool ProductFormula::is_consistent(double tol) const {
  for (const auto& [label, sum] : label_sums()) {
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

ProductFormula ProductFormula::scaled(double c) const {
  ProductFormula out = *this;
  for (auto& st : out.stages_) st.coefficient *= c;
  return out;
}

ProductFormula ProductFormula::merged() const {
  ProductFormula out = *this;
  out.stages_.clear();
  for (const auto& st : stages_) {
    if (!out.stages_.empty() && out.stages_.back().label == st.label) {
      out.stages_.back().coefficient += st.coefficient;
    } else {
      out.stages_.push_back(st);
    }
  }
  return out;
}

ProductFormula ProductFormula::renamed(std::string name) const {
  ProductFormula out = *this;
  out.name_ = std::move(name);
  return out;
}

ProductFormula lie_trotter(const std::vector<std::string>& labels) {
  require_labels(labels, 1, "lie_trotter");
  std::vector<Stage> stages;
  for (const auto& l : labels) stages.push_back({l, 1.0});
  return ProductFormula("trotter1", std::move(stages), 1);
}

ProductFormula strang(const std::vector<std::string>& labels) {
  require_labels(labels, 2, "strang");
  std::vector<Stage> stages;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) stages.push_back({labels[i], 0.5});
  stages.push_back({labels.back(), 1.0});
  for (std::size_t i = labels.size() - 1; i-- > 0;) stages.push_back({labels[i], 0.5});
  return ProductFormula("strang", std::move(stages), 2);
}

double suzuki4_weight() { return 1.0 / (4.0 - std::cbrt(4.0)); }

ProductFormula suzuki4(const std::vector<std::string>& labels) {
  require_labels(labels, 2, "suzuki4");
  const double u = suzuki4_weight();
  const ProductFormula s2 = strang(labels);
  const double weights[5] = {u, u, 1.0 - 4.0 * u, u, u};
  std::vector<Stage> stages;
  for (double w : weights) {
    for (const auto& st : s2.stages()) stages.push_back({st.label, st.coefficient * w});
  }
  return ProductFormula("suzuki4", std::move(stages), 4).merged();
}

ProductFormula custom_w2(const std::array<double, 5>& a, double tol,
                         const std::string& label_a, const std::string& label_b) {
  // a5 acts first.
  ProductFormula f("w2:a4=" + short_number(a[3]),
                   {{label_a, a[4]}, {label_b, a[3]}, {label_a, a[2]}, {label_b, a[1]},
                    {label_a, a[0]}},
                   2);
  const ConditionReport report = check_w2_conditions(expand_exponent(f, 2));
  if (!(report.max() < tol)) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "custom_w2: coefficients violate the design conditions (residuals "
        << report.first_order << ", " << report.commutator << ", " << report.equal_coefficients
        << ")";
    throw ConditionViolation(msg.str());
  }
  return f;
}

ProductFormula reverse(const ProductFormula& f) {
  std::vector<Stage> stages(f.stages().rbegin(), f.stages().rend());
  return ProductFormula("reverse(" + f.name() + ")", std::move(stages), f.declared_order());
}

ProductFormula compose(const ProductFormula& first, double c_first,
                       const ProductFormula& second, double c_second) {
  if (std::abs(c_first + c_second - 1.0) > 1e-12) {
    throw FractionMismatch("compose: fractions sum to " + short_number(c_first + c_second) +
                           ", expected 1");
  }
  if (!first.empty() && !second.empty() && first.labels() != second.labels()) {
    throw LabelError("compose: formulas act on different label sets");
  }
  std::vector<Stage> stages;
  for (const auto& st : second.stages()) stages.push_back({st.label, st.coefficient * c_second});
  for (const auto& st : first.stages()) stages.push_back({st.label, st.coefficient * c_first});
  int order = 1;
  if (first.empty()) {
    order = second.declared_order();
  } else if (second.empty()) {
    order = first.declared_order();
  } else {
    order = std::min(first.declared_order(), second.declared_order());
  }
  std::string name;
  if (first.empty()) {
    name = second.name();
  } else if (second.empty()) {
    name = first.name();
  } else {
    name = first.name() + "(" + short_number(c_first) + "s)*" + second.name() + "(" +
           short_number(c_second) + "s)";
  }
  return ProductFormula(std::move(name), std::move(stages), order).merged();
}

template <typename Real>
TermPropagator<Real>::TermPropagator(const PartitionedHamiltonian& h, int max_qubits)
    : h_(h) {
  terms_.reserve(h_.term_count());
  term_eigs_.reserve(h_.term_count());
  total_ = CMatrix<Real>::Zero(static_cast<Eigen::Index>(h_.dim()),
                               static_cast<Eigen::Index>(h_.dim()));
  for (const auto& t : h_.terms()) {
    terms_.push_back(term_dense<Real>(t, max_qubits));
    term_eigs_.push_back(eig_hermitian<Real>(terms_.back()));
    total_ += terms_.back();
  }
  total_eig_ = eig_hermitian<Real>(total_);
}

template <typename Real>
const CMatrix<Real>& TermPropagator<Real>::term_matrix(const std::string& label) const {
  return terms_[h_.index_of(label)];
}

template <typename Real>
double TermPropagator<Real>::term_norm(const std::string& label) const {
  const auto& values = term_eigs_[h_.index_of(label)].values;
  return values.size() == 0 ? 0.0 : static_cast<double>(values.cwiseAbs().maxCoeff());
}

template <typename Real>
double TermPropagator<Real>::phase_bound(const ProductFormula& f, double s) const {
  double total = 0.0;
  for (const auto& st : f.stages()) total += std::abs(st.coefficient) * term_norm(st.label);
  return std::abs(s) * total;
}

template <typename Real>
CMatrix<Real> TermPropagator<Real>::step(const ProductFormula& f, double s) const {
  if (!std::isfinite(s)) throw UsageError("step: step size must be finite");
  const auto n = static_cast<Eigen::Index>(h_.dim());
  CMatrix<Real> w = CMatrix<Real>::Identity(n, n);
  CVector<Real> phases(n);
  for (const auto& st : f.stages()) {
    const EigSystem<Real>& es = term_eigs_[h_.index_of(st.label)];
    const Real t = static_cast<Real>(st.coefficient) * static_cast<Real>(s);
    if (t == Real(0)) continue;
    for (Eigen::Index k = 0; k < n; ++k) phases[k] = std::polar(Real(1), -t * es.values[k]);
    CMatrix<Real> rotated = es.vectors.adjoint() * w;
    rotated = phases.asDiagonal() * rotated;
    w.noalias() = es.vectors * rotated;
  }
  return w;
}

template <typename Real>
CMatrix<Real> TermPropagator<Real>::exact(double s) const {
  return expm_i<Real>(total_eig_, static_cast<Real>(s));
}

template class TermPropagator<double>;
template class TermPropagator<long double>;

Matrix step_matrix(const ProductFormula& f, const PartitionedHamiltonian& h, double s) {
  for (const auto& st : f.stages()) {
    if (!h.has_label(st.label)) {
      throw LabelError("step_matrix: unknown term label '" + st.label + "'");
    }
  }
  const auto n = static_cast<Eigen::Index>(h.dim());
  Matrix w = Matrix::Identity(n, n);
  for (const auto& st : f.stages()) {
    const Matrix term = term_dense<double>(h.term(st.label));
    w = expm_i<double>(term, st.coefficient * s) * w;
  }
  return w;
}

}  // namespace trotterbench
