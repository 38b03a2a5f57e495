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

#include "trotterbench/hamiltonian_spec.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace trotterbench {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("hamiltonian spec: bad value '" + value + "' for key '" + key + "'");
  }
  return out;
}

}  // namespace

HamiltonianSpec parse_hamiltonian_spec(std::istream& in) {
  HamiltonianSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("hamiltonian spec line " + std::to_string(lineno) +
                       ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "kind") {
      if (value != "xy" && value != "random") {
        throw UsageError("hamiltonian spec: kind must be xy or random");
      }
      spec.kind = value;
    } else if (key == "rows") {
      spec.rows = parse_number<int>(key, value);
    } else if (key == "cols") {
      spec.cols = parse_number<int>(key, value);
    } else if (key == "jx") {
      spec.jx = parse_number<double>(key, value);
    } else if (key == "jy") {
      spec.jy = parse_number<double>(key, value);
    } else if (key == "n_qubits") {
      spec.n_qubits = parse_number<int>(key, value);
    } else if (key == "strings_per_term") {
      spec.strings_per_term = parse_number<int>(key, value);
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "max_qubits") {
      spec.max_qubits = parse_number<int>(key, value);
    } else {
      throw UsageError("hamiltonian spec: unknown key '" + key + "'");
    }
  }
  return spec;
}

HamiltonianSpec load_hamiltonian_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open hamiltonian spec " + path.string());
  return parse_hamiltonian_spec(in);
}

std::string format_hamiltonian_spec(const HamiltonianSpec& spec) {
  std::ostringstream out;
  out << "kind = " << spec.kind << "\n";
  if (spec.kind == "xy") {
    out << "rows = " << spec.rows << "\ncols = " << spec.cols << "\njx = " << spec.jx
        << "\njy = " << spec.jy << "\n";
  } else {
    out << "n_qubits = " << spec.n_qubits << "\nstrings_per_term = " << spec.strings_per_term
        << "\nseed = " << spec.seed << "\n";
  }
  if (spec.max_qubits != kDefaultMaxQubits) out << "max_qubits = " << spec.max_qubits << "\n";
  return out.str();
}

PartitionedHamiltonian build_hamiltonian(const HamiltonianSpec& spec) {
  if (spec.kind == "xy") {
    return build_xy_lattice(spec.rows, spec.cols, spec.jx, spec.jy, spec.max_qubits);
  }
  if (spec.kind == "random") {
    return build_random_two_term(spec.n_qubits, spec.strings_per_term, spec.seed,
                                 spec.max_qubits);
  }
  throw UsageError("hamiltonian spec: unknown kind '" + spec.kind + "'");
}

}  // namespace trotterbench
