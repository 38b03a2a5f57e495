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

// Plain-text Hamiltonian description, one `key = value` per line. `#` starts
// a comment. Recognized keys:
//
//   kind              xy | random
//   rows, cols        grid shape (xy)
//   jx, jy            couplings (xy)
//   n_qubits          qubit count (random)
//   strings_per_term  Pauli strings per term (random)
//   seed              64-bit generator seed (random)
//   max_qubits        dense realization limit (optional, default 14)

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {

struct HamiltonianSpec {
  std::string kind = "xy";
  int rows = 2;
  int cols = 3;
  double jx = 0.25;
  double jy = 0.75;
  int n_qubits = 9;
  int strings_per_term = 50;
  std::uint64_t seed = 7;
  int max_qubits = kDefaultMaxQubits;
};

HamiltonianSpec parse_hamiltonian_spec(std::istream& in);
HamiltonianSpec load_hamiltonian_spec(const std::filesystem::path& path);
std::string format_hamiltonian_spec(const HamiltonianSpec& spec);

PartitionedHamiltonian build_hamiltonian(const HamiltonianSpec& spec);

}  // namespace trotterbench
