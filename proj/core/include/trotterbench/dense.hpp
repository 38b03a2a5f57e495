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

// Dense complex kernels shared by every module. All routines are templates
// over the real scalar so the spectroscopy path can run in long double when
// the eigenphase resolution of a double-precision unitary (~eps / s) is not
// enough.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "trotterbench/errors.hpp"

namespace trotterbench {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Matrix = CMatrix<double>;
using Vector = CVector<double>;
using ExtMatrix = CMatrix<long double>;
using ExtVector = CVector<long double>;

/// Arithmetic used for propagation and spectroscopy. Auto selects Extended
/// for dimensions up to kAutoExtendedMaxDim.
enum class Precision { Double, Extended, Auto };

inline constexpr std::size_t kAutoExtendedMaxDim = 64;

inline Precision resolve_precision(Precision p, std::size_t dim) {
  if (p != Precision::Auto) return p;
  return dim <= kAutoExtendedMaxDim ? Precision::Extended : Precision::Double;
}

inline std::string to_string(Precision p) {
  switch (p) {
    case Precision::Double: return "double";
    case Precision::Extended: return "extended";
    case Precision::Auto: return "auto";
  }
  return "auto";
}

template <typename To, typename From>
CMatrix<To> precision_cast(const CMatrix<From>& m) {
  return m.template cast<std::complex<To>>();
}

template <typename To, typename From>
CVector<To> precision_cast(const CVector<From>& v) {
  return v.template cast<std::complex<To>>();
}

template <typename Real>
Real max_abs(const CMatrix<Real>& m) {
  return m.size() == 0 ? Real(0) : m.cwiseAbs().maxCoeff();
}

/// max_ij |m_ij - conj(m_ji)|
template <typename Real>
Real hermiticity_error(const CMatrix<Real>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<Real>::infinity();
  return max_abs<Real>(m - m.adjoint());
}

/// max_ij |(u^dagger u - I)_ij|
template <typename Real>
Real unitarity_error(const CMatrix<Real>& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<Real>::infinity();
  return max_abs<Real>(
      CMatrix<Real>(u.adjoint() * u - CMatrix<Real>::Identity(u.rows(), u.cols())));
}

template <typename Real>
struct EigSystem {
  RVector<Real> values;   // ascending
  CMatrix<Real> vectors;  // columns

  Eigen::Index size() const { return values.size(); }

  /// Distance from eigenvalue k to the nearest other eigenvalue.
  Real gap_at(Eigen::Index k) const {
    Real gap = std::numeric_limits<Real>::infinity();
    for (Eigen::Index j = 0; j < values.size(); ++j) {
      if (j != k) gap = std::min(gap, std::abs(values[j] - values[k]));
    }
    return gap;
  }
};

template <typename Real>
EigSystem<Real> eig_hermitian(const CMatrix<Real>& m, double tol = 1e-10) {
  if (m.rows() != m.cols()) {
    throw DimensionError("eig_hermitian: matrix is not square");
  }
  const Real scale = std::max<Real>(Real(1), max_abs<Real>(m));
  if (hermiticity_error<Real>(m) > Real(tol) * scale) {
    throw NonHermitianError("eig_hermitian: input is not Hermitian");
  }
  // The solver reads the lower triangle only; symmetrize so both halves count.
  const CMatrix<Real> sym = (m + m.adjoint()) * Real(0.5);
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eig_hermitian: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// e^{-i t H} from a precomputed eigensystem of H.
template <typename Real>
CMatrix<Real> expm_i(const EigSystem<Real>& es, Real t) {
  const Eigen::Index n = es.size();
  if (t == Real(0)) return CMatrix<Real>::Identity(n, n);
  CVector<Real> phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases[k] = std::polar(Real(1), -t * es.values[k]);
  }
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

template <typename Real>
CMatrix<Real> expm_i(const CMatrix<Real>& m, Real t) {
  return expm_i<Real>(eig_hermitian<Real>(m), t);
}

/// Eigen-decomposition of a unitary u = V diag(e^{-i phases}) V^dagger with
/// principal phases in (-pi, pi).
template <typename Real>
struct UnitaryPhases {
  RVector<Real> phases;
  CMatrix<Real> vectors;
};

inline constexpr double kAliasingMargin = 1e-6;

/// Diagonalizes a unitary through its Cayley transform
/// C = i (I - u)(I + u)^{-1}, which is Hermitian with eigenvalues
/// -tan(phase / 2). Eigenvectors come out orthonormal even for degenerate
/// phases.
template <typename Real>
UnitaryPhases<Real> unitary_phases(const CMatrix<Real>& u,
                                   double unitarity_tol = 1e-8) {
  using Complex = std::complex<Real>;
  if (u.rows() != u.cols()) {
    throw DimensionError("unitary_phases: matrix is not square");
  }
  if (unitarity_error<Real>(u) > Real(unitarity_tol)) {
    throw NonUnitaryError("unitary_phases: input is not unitary");
  }
  const Eigen::Index n = u.rows();
  const CMatrix<Real> id = CMatrix<Real>::Identity(n, n);
  Eigen::PartialPivLU<CMatrix<Real>> lu(id + u);
  if (!(lu.rcond() > Real(1e-10))) {
    throw AliasingError("unitary_phases: eigenphase at the branch cut (pi)");
  }
  CMatrix<Real> cayley = Complex(0, 1) * lu.solve(CMatrix<Real>(id - u));
  cayley = (cayley + cayley.adjoint()) * Real(0.5);
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(cayley);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("unitary_phases: eigensolver did not converge");
  }
  UnitaryPhases<Real> out;
  out.vectors = solver.eigenvectors();
  out.phases.resize(n);
  const Real limit = std::numbers::pi_v<Real> - Real(kAliasingMargin);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Real phase = Real(-2) * std::atan(solver.eigenvalues()[k]);
    if (std::abs(phase) >= limit) {
      throw AliasingError("unitary_phases: eigenphase magnitude " +
                          std::to_string(static_cast<double>(std::abs(phase))) +
                          " reaches pi - 1e-6");
    }
    out.phases[k] = phase;
  }
  return out;
}

/// Effective Hamiltonian (i/s) log u on the principal branch, so that
/// e^{-i s result} = u.
template <typename Real>
CMatrix<Real> logm_unitary(const CMatrix<Real>& u, Real s) {
  if (!(s > Real(0))) {
    throw UsageError("logm_unitary: step size must be positive");
  }
  const UnitaryPhases<Real> up = unitary_phases<Real>(u);
  const RVector<Real> energies = up.phases / s;
  CMatrix<Real> out = up.vectors * energies.asDiagonal() * up.vectors.adjoint();
  return (out + out.adjoint()) * Real(0.5);
}

/// Largest singular value.
template <typename Real>
Real spectral_norm(const CMatrix<Real>& m) {
  if (m.size() == 0) return Real(0);
  const CMatrix<Real> gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(gram, Eigen::EigenvaluesOnly);
  const Real top = solver.eigenvalues().maxCoeff();
  return top > Real(0) ? std::sqrt(top) : Real(0);
}

template <typename Real>
CMatrix<Real> commutator(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionError("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

/// [w_0, [w_1, ... [w_{l-1}, w_l]...]] for word = (w_0, ..., w_l), outermost
/// letter first.
template <typename Real>
CMatrix<Real> nested_commutator(std::span<const CMatrix<Real>* const> word) {
  if (word.empty()) throw UsageError("nested_commutator: empty word");
  CMatrix<Real> acc = *word.back();
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    acc = commutator<Real>(*word[i], acc);
  }
  return acc;
}

/// Applies the nested commutator of `word` to a vector without forming the
/// operator: [X, R] v = X (R v) - R (X v).
template <typename Real>
CVector<Real> apply_nested_commutator(std::span<const CMatrix<Real>* const> word,
                                      const CVector<Real>& v) {
  if (word.empty()) throw UsageError("apply_nested_commutator: empty word");
  if (word.size() == 1) return (*word[0]) * v;
  const auto rest = word.subspan(1);
  return (*word[0]) * apply_nested_commutator<Real>(rest, v) -
         apply_nested_commutator<Real>(rest, CVector<Real>((*word[0]) * v));
}

}  // namespace trotterbench
