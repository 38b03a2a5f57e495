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

#include "trotterbench/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace trotterbench {

std::string CommutatorWord::to_string() const {
  if (letters.empty()) return "";
  std::string out = letters.back();
  for (std::size_t i = letters.size() - 1; i-- > 0;) {
    out = "[" + letters[i] + "," + out + "]";
  }
  return out;
}

bool WordOrder::operator()(const CommutatorWord& x, const CommutatorWord& y) const {
  if (x.letters.size() != y.letters.size()) return x.letters.size() < y.letters.size();
  return x.letters < y.letters;
}

int canonicalize(CommutatorWord& w) {
  const std::size_t n = w.letters.size();
  if (n < 2) return 1;
  auto& inner = w.letters[n - 2];
  auto& innermost = w.letters[n - 1];
  if (inner == innermost) return 0;
  if (innermost < inner) {
    std::swap(inner, innermost);
    return -1;
  }
  return 1;
}

double ExponentExpansion::coefficient(CommutatorWord w) const {
  const int sign = canonicalize(w);
  if (sign == 0) return 0.0;
  const auto it = terms.find(w);
  return it == terms.end() ? 0.0 : sign * it->second;
}

std::vector<std::string> ExponentExpansion::labels() const {
  std::vector<std::string> out;
  for (const auto& [label, _] : first_order) out.push_back(label);
  return out;
}

ExponentExpansion expand_exponent(const ProductFormula& f, int max_order) {
  if (max_order < 1 || max_order > kMaxExpansionOrder) {
    throw UsageError("expand_exponent: supported orders are 1.." +
                     std::to_string(kMaxExpansionOrder));
  }
  ExponentExpansion e;
  e.max_order = max_order;
  e.first_order = f.label_sums();

  const auto& stages = f.stages();
  const std::size_t q = stages.size();
  std::vector<std::size_t> outer;  // nu_1 <= nu_2 <= ... (position indices)

  // Adds the word for base position nu with outer positions `outer`.
  auto emit = [&](std::size_t nu) {
    double coeff = stages[nu].coefficient;
    std::size_t run = 1;
    double factorial = 1.0;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      coeff *= stages[outer[i]].coefficient;
      if (i > 0 && outer[i] == outer[i - 1]) {
        ++run;
        factorial *= static_cast<double>(run);
      } else {
        run = 1;
      }
    }
    coeff /= factorial;
    if (coeff == 0.0) return;
    CommutatorWord w;
    w.letters.reserve(outer.size() + 1);
    for (std::size_t i = outer.size(); i-- > 0;) w.letters.push_back(stages[outer[i]].label);
    w.letters.push_back(stages[nu].label);
    const int sign = canonicalize(w);
    if (sign == 0) return;
    e.terms[w] += sign * coeff;
  };

  std::function<void(std::size_t, std::size_t, int)> recurse =
      [&](std::size_t nu, std::size_t start, int remaining) {
        if (remaining == 0) {
          emit(nu);
          return;
        }
        for (std::size_t k = start; k < q; ++k) {
          outer.push_back(k);
          recurse(nu, k, remaining - 1);
          outer.pop_back();
        }
      };

  for (std::size_t nu = 0; nu < q; ++nu) {
    for (int order = 1; order <= max_order; ++order) {
      recurse(nu, nu + 1, order);
    }
  }
  return e;
}

double ConditionReport::max() const {
  return std::max({first_order, commutator, equal_coefficients});
}

ConditionReport check_w2_conditions(const ExponentExpansion& e) {
  const auto labels = e.labels();
  if (labels.size() != 2) {
    throw LabelError("check_w2_conditions: expected exactly two labels, got " +
                     std::to_string(labels.size()));
  }
  if (e.max_order < 2) {
    throw UsageError("check_w2_conditions: expansion must reach order 2");
  }
  const std::string& x = labels[0];
  const std::string& y = labels[1];
  ConditionReport r;
  r.first_order = std::max(std::abs(e.first_order.at(x) - 1.0),
                           std::abs(e.first_order.at(y) - 1.0));
  r.commutator = std::abs(e.coefficient({{x, y}}));
  r.equal_coefficients = std::abs(e.coefficient({{x, x, y}}) - e.coefficient({{y, x, y}}));
  return r;
}

ExpansionEvaluator::ExpansionEvaluator(ExponentExpansion e, const PartitionedHamiltonian& h,
                                       int max_qubits)
    : e_(std::move(e)), labels_(h.labels()) {
  for (const auto& [label, _] : e_.first_order) {
    if (!h.has_label(label)) {
      throw LabelError("expansion label '" + label + "' is not a term of the Hamiltonian");
    }
  }
  for (const auto& t : h.terms()) terms_.push_back(term_dense<double>(t, max_qubits));
  total_ = Matrix::Zero(terms_.front().rows(), terms_.front().cols());
  for (const auto& t : terms_) total_ += t;
}

Matrix ExpansionEvaluator::word_matrix(const CommutatorWord& w) const {
  std::vector<const Matrix*> word;
  for (const auto& l : w.letters) {
    const auto it = std::find(labels_.begin(), labels_.end(), l);
    word.push_back(&terms_[static_cast<std::size_t>(it - labels_.begin())]);
  }
  return nested_commutator<double>(word);
}

Matrix ExpansionEvaluator::weighted_sum(
    const std::array<std::complex<double>, kMaxExpansionOrder + 1>& weights) const {
  Matrix out = Matrix::Zero(total_.rows(), total_.cols());
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    const auto it = e_.first_order.find(labels_[j]);
    const double f = it == e_.first_order.end() ? 0.0 : it->second;
    if (f != 1.0) out += weights[0] * (f - 1.0) * terms_[j];
  }
  for (const auto& [w, c] : e_.terms) {
    const std::complex<double> weight = weights[w.order()];
    if (weight == 0.0) continue;
    out += (weight * c) * word_matrix(w);
  }
  return out;
}

Matrix ExpansionEvaluator::exponent(double sigma) const {
  std::array<std::complex<double>, kMaxExpansionOrder + 1> weights{};
  const std::complex<double> step(0.0, -sigma);
  weights[0] = 1.0;
  for (int l = 1; l <= kMaxExpansionOrder; ++l) weights[l] = weights[l - 1] * step;
  return weighted_sum(weights);
}

Matrix ExpansionEvaluator::magnus_h1(double s) const {
  std::array<std::complex<double>, kMaxExpansionOrder + 1> weights{};
  const std::complex<double> step(0.0, -s);
  std::complex<double> power = 1.0;
  for (int l = 0; l <= kMaxExpansionOrder; ++l) {
    weights[l] = power / static_cast<double>(l + 1);
    power *= step;
  }
  Matrix out = total_ + weighted_sum(weights);
  return (out + out.adjoint()) * 0.5;
}

double ExpansionEvaluator::predicted_delta_e(const Vector& psi, double s) const {
  if (psi.size() != total_.rows()) {
    throw DimensionError("predicted_delta_e: state dimension mismatch");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-8) {
    throw NonEigenvectorError("predicted_delta_e: state is not normalized");
  }
  const Vector h_psi = total_ * psi;
  const std::complex<double> energy = psi.dot(h_psi);
  if ((h_psi - energy * psi).norm() > 1e-8) {
    throw NonEigenvectorError("predicted_delta_e: state is not an eigenvector of H");
  }

  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    const auto it = e_.first_order.find(labels_[j]);
    const double f = it == e_.first_order.end() ? 0.0 : it->second;
    if (f != 1.0) sum += (f - 1.0) * psi.dot(terms_[j] * psi);
  }
  const std::complex<double> step(0.0, -s);
  for (const auto& [w, c] : e_.terms) {
    std::vector<const Matrix*> word;
    for (const auto& l : w.letters) {
      const auto it = std::find(labels_.begin(), labels_.end(), l);
      word.push_back(&terms_[static_cast<std::size_t>(it - labels_.begin())]);
    }
    const auto order = static_cast<int>(w.order());
    const std::complex<double> weight =
        std::pow(step, order) / static_cast<double>(order + 1);
    sum += weight * c * psi.dot(apply_nested_commutator<double>(word, psi));
  }
  const double scale = std::max(1.0, std::abs(sum.real()));
  if (std::abs(sum.imag()) > 1e-10 * scale) {
    throw NumericalError("predicted_delta_e: expectation has a non-negligible imaginary part");
  }
  return sum.real();
}

Matrix exponent_matrix(const ExponentExpansion& e, const PartitionedHamiltonian& h,
                       double sigma) {
  return ExpansionEvaluator(e, h).exponent(sigma);
}

Matrix magnus_h1(const ExponentExpansion& e, const PartitionedHamiltonian& h, double s) {
  return ExpansionEvaluator(e, h).magnus_h1(s);
}

double predicted_delta_e(const ExponentExpansion& e, const PartitionedHamiltonian& h,
                         const Vector& psi, double s) {
  return ExpansionEvaluator(e, h).predicted_delta_e(psi, s);
}

}  // namespace trotterbench
