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

#include "trotterbench/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>

namespace trotterbench {

namespace {

void check_qubits(std::size_t n, int max_qubits) {
  if (n == 0) throw UsageError("qubit count must be positive");
  if (static_cast<long long>(n) > max_qubits || n > 62) {
    throw DimensionError("qubit count " + std::to_string(n) +
                         " exceeds the dense limit of " + std::to_string(max_qubits));
  }
}

template <typename Real>
void accumulate_string(CMatrix<Real>& m, const PauliString& p) {
  using Complex = std::complex<Real>;
  if (p.weight() == 0.0) return;
  const std::uint64_t flip = p.flip_mask();
  const std::uint64_t phase = p.phase_mask();
  // i^{#Y}
  static const Complex kIPow[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                                   Complex(0, -1)};
  const Complex base = kIPow[p.y_count() % 4] * static_cast<Real>(p.weight());
  const std::uint64_t dim = static_cast<std::uint64_t>(m.rows());
  for (std::uint64_t col = 0; col < dim; ++col) {
    const std::uint64_t row = col ^ flip;
    const bool negative = (std::popcount(col & phase) & 1) != 0;
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
        negative ? -base : base;
  }
}

}  // namespace

PauliString::PauliString(std::string letters, double weight)
    : letters_(std::move(letters)), weight_(weight) {
  if (letters_.empty()) throw UsageError("Pauli string must act on >= 1 qubit");
  for (char c : letters_) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw UsageError("invalid Pauli letter '" + std::string(1, c) + "'");
    }
  }
  if (!std::isfinite(weight_)) throw UsageError("Pauli weight must be finite");
}

std::uint64_t PauliString::flip_mask() const {
  std::uint64_t mask = 0;
  const std::size_t n = letters_.size();
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == 'X' || letters_[q] == 'Y') mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

std::uint64_t PauliString::phase_mask() const {
  std::uint64_t mask = 0;
  const std::size_t n = letters_.size();
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == 'Y' || letters_[q] == 'Z') mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

int PauliString::y_count() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'Y'));
}

HamTerm::HamTerm(std::string label, std::size_t qubit_count,
                 std::vector<PauliString> strings)
    : label_(std::move(label)), qubit_count_(qubit_count), strings_(std::move(strings)) {
  if (label_.empty()) throw UsageError("term label must be non-empty");
  if (qubit_count_ == 0) throw UsageError("term qubit count must be positive");
  for (const auto& s : strings_) {
    if (s.qubit_count() != qubit_count_) {
      throw UsageError("term '" + label_ + "': string " + s.letters() +
                       " has the wrong qubit count");
    }
  }
}

PartitionedHamiltonian::PartitionedHamiltonian(std::vector<HamTerm> terms)
    : qubit_count_(0), terms_(std::move(terms)) {
  if (terms_.empty()) throw UsageError("Hamiltonian needs at least one term");
  qubit_count_ = terms_.front().qubit_count();
  std::set<std::string> seen;
  for (const auto& t : terms_) {
    if (t.qubit_count() != qubit_count_) {
      throw UsageError("terms disagree on qubit count");
    }
    if (!seen.insert(t.label()).second) {
      throw UsageError("duplicate term label '" + t.label() + "'");
    }
  }
}

std::size_t PartitionedHamiltonian::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].label() == label) return i;
  }
  throw LabelError("unknown term label '" + std::string(label) + "'");
}

const HamTerm& PartitionedHamiltonian::term(std::string_view label) const {
  return terms_[index_of(label)];
}

bool PartitionedHamiltonian::has_label(std::string_view label) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const HamTerm& t) { return t.label() == label; });
}

std::vector<std::string> PartitionedHamiltonian::labels() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.label());
  return out;
}

std::vector<PauliString> PartitionedHamiltonian::flattened() const {
  std::vector<PauliString> out;
  for (const auto& t : terms_) {
    out.insert(out.end(), t.strings().begin(), t.strings().end());
  }
  return out;
}

std::string PartitionedHamiltonian::digest() const {
  std::uint64_t hash = 14695981039346656037ULL;
  auto mix = [&hash](const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash ^= bytes[i];
      hash *= 1099511628211ULL;
    }
  };
  for (const auto& t : terms_) {
    mix(t.label().data(), t.label().size());
    for (const auto& s : t.strings()) {
      mix(s.letters().data(), s.letters().size());
      const double w = s.weight();
      mix(&w, sizeof w);
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

template <typename Real>
CMatrix<Real> pauli_dense(const PauliString& p, int max_qubits) {
  check_qubits(p.qubit_count(), max_qubits);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << p.qubit_count());
  CMatrix<Real> m = CMatrix<Real>::Zero(dim, dim);
  accumulate_string<Real>(m, p);
  return m;
}

template <typename Real>
CMatrix<Real> strings_dense(const std::vector<PauliString>& strings,
                            std::size_t qubit_count, int max_qubits) {
  check_qubits(qubit_count, max_qubits);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << qubit_count);
  CMatrix<Real> m = CMatrix<Real>::Zero(dim, dim);
  for (const auto& s : strings) {
    if (s.qubit_count() != qubit_count) {
      throw DimensionError("strings_dense: qubit count mismatch");
    }
    accumulate_string<Real>(m, s);
  }
  return m;
}

template <typename Real>
CMatrix<Real> term_dense(const HamTerm& t, int max_qubits) {
  return strings_dense<Real>(t.strings(), t.qubit_count(), max_qubits);
}

template <typename Real>
CMatrix<Real> total_dense(const PartitionedHamiltonian& h, int max_qubits) {
  return strings_dense<Real>(h.flattened(), h.qubit_count(), max_qubits);
}

template CMatrix<double> pauli_dense<double>(const PauliString&, int);
template CMatrix<long double> pauli_dense<long double>(const PauliString&, int);
template CMatrix<double> strings_dense<double>(const std::vector<PauliString>&,
                                               std::size_t, int);
template CMatrix<long double> strings_dense<long double>(const std::vector<PauliString>&,
                                                         std::size_t, int);
template CMatrix<double> term_dense<double>(const HamTerm&, int);
template CMatrix<long double> term_dense<long double>(const HamTerm&, int);
template CMatrix<double> total_dense<double>(const PartitionedHamiltonian&, int);
template CMatrix<long double> total_dense<long double>(const PartitionedHamiltonian&, int);

std::vector<std::pair<int, int>> grid_edges(int rows, int cols) {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int site = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(site, site + 1);
      if (r + 1 < rows) edges.emplace_back(site, site + cols);
    }
  }
  return edges;
}

PartitionedHamiltonian build_xy_lattice(int rows, int cols, double jx, double jy,
                                        int max_qubits) {
  if (rows < 1 || cols < 1) throw UsageError("lattice dimensions must be >= 1");
  const long long sites = static_cast<long long>(rows) * cols;
  if (sites > max_qubits) {
    throw DimensionError("lattice of " + std::to_string(sites) +
                         " sites exceeds the dense limit of " + std::to_string(max_qubits));
  }
  const auto n = static_cast<std::size_t>(sites);
  std::vector<PauliString> xx, yy;
  for (const auto& [i, j] : grid_edges(rows, cols)) {
    std::string lx(n, 'I'), ly(n, 'I');
    lx[i] = lx[j] = 'X';
    ly[i] = ly[j] = 'Y';
    xx.emplace_back(std::move(lx), -0.5 * jx);
    yy.emplace_back(std::move(ly), -0.5 * jy);
  }
  return PartitionedHamiltonian({HamTerm("A", n, std::move(xx)),
                                 HamTerm("B", n, std::move(yy))});
}

PartitionedHamiltonian build_random_two_term(int n_qubits, int strings_per_term,
                                             std::uint64_t seed, int max_qubits) {
  if (n_qubits < 1) throw UsageError("n_qubits must be >= 1");
  if (strings_per_term < 1) throw UsageError("strings_per_term must be >= 1");
  check_qubits(static_cast<std::size_t>(n_qubits), max_qubits);
  const auto n = static_cast<std::size_t>(n_qubits);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> support_size(1, n_qubits);
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  std::vector<int> sites(n);

  auto draw_term = [&](const char* label) {
    std::vector<PauliString> strings;
    strings.reserve(static_cast<std::size_t>(strings_per_term));
    for (int k = 0; k < strings_per_term; ++k) {
      const int size = support_size(rng);
      std::iota(sites.begin(), sites.end(), 0);
      std::shuffle(sites.begin(), sites.end(), rng);
      std::string letters(n, 'I');
      for (int j = 0; j < size; ++j) letters[sites[j]] = "XYZ"[letter(rng)];
      strings.emplace_back(std::move(letters), weight(rng));
    }
    return HamTerm(label, n, std::move(strings));
  };
  HamTerm a = draw_term("A");
  HamTerm b = draw_term("B");
  return PartitionedHamiltonian({std::move(a), std::move(b)});
}

}  // namespace trotterbench
