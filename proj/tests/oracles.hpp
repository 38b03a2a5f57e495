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

// Reference implementations that share no code with the library: Kronecker
// products of 2x2 Paulis, a Taylor-series matrix exponential, closed-form
// single-qubit rotations and the closed-form W2 family.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trotterbench/dense.hpp"
#include "trotterbench/formula.hpp"

namespace oracle {

using trotterbench::Matrix;
using cd = std::complex<double>;

inline Matrix pauli(char c) {
  Matrix m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("not a Pauli letter");
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// weight * P_0 (x) P_1 (x) ... with qubit 0 leftmost.
inline Matrix pauli_kron(const std::string& letters, double weight) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : letters) m = kron(m, pauli(c));
  return weight * m;
}

/// e^{-i t H} by scaling and squaring a 30-term Taylor series.
inline Matrix expm_taylor(const Matrix& h, double t) {
  const Matrix x = cd(0, -t) * h;
  const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  const Matrix y = x * scale;
  Matrix term = Matrix::Identity(h.rows(), h.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * y / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Product of Taylor exponentials over the stages (stage 0 acts first).
inline Matrix product(const trotterbench::ProductFormula& f,
                      const std::vector<std::pair<std::string, Matrix>>& terms, double s) {
  const Eigen::Index n = terms.front().second.rows();
  Matrix w = Matrix::Identity(n, n);
  for (const auto& st : f.stages()) {
    for (const auto& [label, m] : terms) {
      if (label == st.label) w = expm_taylor(m, st.coefficient * s) * w;
    }
  }
  return w;
}

/// exp(-i t (n . sigma)) for a real unit-free vector n: cos|n|t I - i sin|n|t n.sigma/|n|.
inline Matrix rotation(double nx, double ny, double nz, double t) {
  const double r = std::sqrt(nx * nx + ny * ny + nz * nz);
  Matrix gen = nx * pauli('X') + ny * pauli('Y') + nz * pauli('Z');
  if (r == 0.0) return Matrix::Identity(2, 2);
  return std::cos(r * t) * Matrix::Identity(2, 2) - cd(0, std::sin(r * t) / r) * gen;
}

/// The two closed-form W2 branches, sorted by a1: with a2 = 1 - a4 and
/// a5 = 1 - a1 - a3, the [A,B] condition forces a1 = 1/2 - a3 a4 and the
/// remaining condition becomes 12 a4 (a4 - 1) a3^2 - 12 a4 (a4 - 1) a3 - 1 = 0.
inline std::vector<std::array<double, 5>> w2_closed_form(double a4) {
  const double q = 12.0 * a4 * (a4 - 1.0);
  const double disc = 0.25 + 1.0 / q;
  std::vector<std::array<double, 5>> out;
  if (!(q > 0.0) || disc < 0.0) return out;
  for (double sign : {-1.0, 1.0}) {
    const double a3 = 0.5 + sign * std::sqrt(disc);
    const double a1 = 0.5 - a3 * a4;
    out.push_back({a1, 1.0 - a4, a3, a4, 1.0 - a1 - a3});
  }
  if (out[0][0] > out[1][0]) std::swap(out[0], out[1]);
  return out;
}

/// Least-squares slope of log|y| against log s.
inline double loglog_slope(const std::vector<double>& s, const std::vector<double>& y) {
  double mx = 0, my = 0;
  const auto n = static_cast<double>(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    mx += std::log(s[i]);
    my += std::log(std::abs(y[i]));
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double dx = std::log(s[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(std::abs(y[i])) - my);
  }
  return sxy / sxx;
}

}  // namespace oracle
