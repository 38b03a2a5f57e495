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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trotterbench/dense.hpp"

namespace trotterbench {

/// Dense realizations refuse more qubits than this unless told otherwise.
inline constexpr int kDefaultMaxQubits = 14;

/// Weighted tensor product of single-qubit Paulis. Qubit 0 is the leftmost
/// tensor factor (most significant bit of the basis index).
class PauliString {
 public:
  PauliString(std::string letters, double weight);

  std::size_t qubit_count() const { return letters_.size(); }
  const std::string& letters() const { return letters_; }
  double weight() const { return weight_; }

  /// Bit (n-1-q) is set when qubit q carries X or Y.
  std::uint64_t flip_mask() const;
  /// Bit (n-1-q) is set when qubit q carries Y or Z.
  std::uint64_t phase_mask() const;
  int y_count() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::string letters_;
  double weight_;
};

class HamTerm {
 public:
  HamTerm(std::string label, std::size_t qubit_count,
          std::vector<PauliString> strings);

  const std::string& label() const { return label_; }
  std::size_t qubit_count() const { return qubit_count_; }
  const std::vector<PauliString>& strings() const { return strings_; }

  bool operator==(const HamTerm&) const = default;

 private:
  std::string label_;
  std::size_t qubit_count_;
  std::vector<PauliString> strings_;
};

/// H = sum_j H_j over labeled, individually exponentiable term groups.
class PartitionedHamiltonian {
 public:
  explicit PartitionedHamiltonian(std::vector<HamTerm> terms);

  std::size_t qubit_count() const { return qubit_count_; }
  std::size_t dim() const { return std::size_t{1} << qubit_count_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<HamTerm>& terms() const { return terms_; }
  const HamTerm& term(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;
  std::vector<std::string> labels() const;

  /// All strings of all terms, in term order.
  std::vector<PauliString> flattened() const;

  /// Stable 64-bit FNV-1a digest of the full string list, as 16 hex digits.
  std::string digest() const;

  bool operator==(const PartitionedHamiltonian&) const = default;

 private:
  std::size_t qubit_count_;
  std::vector<HamTerm> terms_;
};

template <typename Real = double>
CMatrix<Real> pauli_dense(const PauliString& p, int max_qubits = kDefaultMaxQubits);

template <typename Real = double>
CMatrix<Real> strings_dense(const std::vector<PauliString>& strings,
                            std::size_t qubit_count,
                            int max_qubits = kDefaultMaxQubits);

template <typename Real = double>
CMatrix<Real> term_dense(const HamTerm& t, int max_qubits = kDefaultMaxQubits);

template <typename Real = double>
CMatrix<Real> total_dense(const PartitionedHamiltonian& h,
                          int max_qubits = kDefaultMaxQubits);

extern template CMatrix<double> pauli_dense<double>(const PauliString&, int);
extern template CMatrix<long double> pauli_dense<long double>(const PauliString&, int);
extern template CMatrix<double> strings_dense<double>(const std::vector<PauliString>&,
                                                      std::size_t, int);
extern template CMatrix<long double> strings_dense<long double>(
    const std::vector<PauliString>&, std::size_t, int);
extern template CMatrix<double> term_dense<double>(const HamTerm&, int);
extern template CMatrix<long double> term_dense<long double>(const HamTerm&, int);
extern template CMatrix<double> total_dense<double>(const PartitionedHamiltonian&, int);
extern template CMatrix<long double> total_dense<long double>(
    const PartitionedHamiltonian&, int);

/// Nearest-neighbour edges of an open rows x cols grid, sites numbered
/// row-major. Count is rows*(cols-1) + cols*(rows-1).
std::vector<std::pair<int, int>> grid_edges(int rows, int cols);

/// Two-term XY model on an open grid:
///   A = -(jx/2) sum_<ij> X_i X_j,  B = -(jy/2) sum_<ij> Y_i Y_j.
PartitionedHamiltonian build_xy_lattice(int rows, int cols, double jx, double jy,
                                        int max_qubits = kDefaultMaxQubits);

/// Two terms "A" and "B" of random Pauli strings. Each string has a support
/// size uniform in 1..n_qubits, support sites drawn without replacement,
/// letters uniform over {X,Y,Z} and weight uniform in [-1, 1].
PartitionedHamiltonian build_random_two_term(int n_qubits, int strings_per_term,
                                             std::uint64_t seed,
                                             int max_qubits = kDefaultMaxQubits);

}  // namespace trotterbench
