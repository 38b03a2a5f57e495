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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "trotterbench/designer.hpp"
#include "trotterbench/errors.hpp"
#include "trotterbench/formula.hpp"
#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {
namespace {

using Stages = std::vector<Stage>;

PartitionedHamiltonian single_qubit(double ax, double bz) {
  return PartitionedHamiltonian({HamTerm("A", 1, {PauliString("X", ax)}),
                                 HamTerm("B", 1, {PauliString("Z", bz)})});
}

PartitionedHamiltonian commuting_pair() {
  return PartitionedHamiltonian({HamTerm("A", 2, {PauliString("XI", 1.0)}),
                                 HamTerm("B", 2, {PauliString("IX", 1.0)})});
}

std::vector<std::pair<std::string, Matrix>> oracle_terms(const PartitionedHamiltonian& h) {
  std::vector<std::pair<std::string, Matrix>> out;
  for (const auto& t : h.terms()) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(h.dim()), static_cast<Eigen::Index>(h.dim()));
    for (const auto& p : t.strings()) m += oracle::pauli_kron(p.letters(), p.weight());
    out.emplace_back(t.label(), m);
  }
  return out;
}

TEST(LieTrotter, Stages) {
  const auto f = lie_trotter({"A", "B"});
  EXPECT_EQ(f.stages(), (Stages{{"A", 1}, {"B", 1}}));
  EXPECT_EQ(f.declared_order(), 1);
  EXPECT_EQ(lie_trotter({"A"}).size(), 1u);
  EXPECT_EQ(lie_trotter({"A", "B", "C"}).size(), 3u);
  EXPECT_THROW(lie_trotter({}), UsageError);
  EXPECT_THROW(lie_trotter({"A", "A"}), UsageError);
}

TEST(Strang, SymmetricSplitting) {
  EXPECT_EQ(strang({"A", "B"}).stages(), (Stages{{"A", 0.5}, {"B", 1}, {"A", 0.5}}));
  EXPECT_EQ(strang({"A", "B", "C"}).stages(),
            (Stages{{"A", 0.5}, {"B", 0.5}, {"C", 1}, {"B", 0.5}, {"A", 0.5}}));
  EXPECT_EQ(strang({"A", "B"}).declared_order(), 2);
  EXPECT_TRUE(strang({"A", "B", "C"}).is_consistent());
}

TEST(Suzuki4, WeightAndStageCount) {
  EXPECT_NEAR(suzuki4_weight(), 1.0 / (4.0 - std::cbrt(4.0)), 1e-15);
  EXPECT_NEAR(suzuki4_weight(), 0.4145, 5e-5);
  const auto f = suzuki4({"A", "B"});
  EXPECT_EQ(f.size(), 11u);  // adjacent half-steps merged
  EXPECT_EQ(f.declared_order(), 4);
  for (const auto& [label, sum] : f.label_sums()) EXPECT_NEAR(sum, 1.0, 1e-14) << label;
}

TEST(CustomW2, StageOrderFollowsTheDisplayedProduct) {
  const auto sol = solve_w2(-0.3);
  const auto f = custom_w2(sol.a);
  // e^{-iA a1 s} e^{-iB a2 s} e^{-iA a3 s} e^{-iB a4 s} e^{-iA a5 s}: a5 acts first.
  ASSERT_EQ(f.size(), 5u);
  EXPECT_EQ(f.stages()[0], (Stage{"A", sol.a[4]}));
  EXPECT_EQ(f.stages()[1], (Stage{"B", sol.a[3]}));
  EXPECT_EQ(f.stages()[2], (Stage{"A", sol.a[2]}));
  EXPECT_EQ(f.stages()[3], (Stage{"B", sol.a[1]}));
  EXPECT_EQ(f.stages()[4], (Stage{"A", sol.a[0]}));
  EXPECT_EQ(f.declared_order(), 2);
}

TEST(CustomW2, RejectsStrangPaddedWithZeros) {
  EXPECT_THROW(custom_w2({0.5, 1.0, 0.0, 0.0, 0.5}), ConditionViolation);
}

TEST(CustomW2, RejectsFirstOrderViolation) {
  auto a = solve_w2(-0.3).a;
  a[2] += 0.01;
  EXPECT_THROW(custom_w2(a), ConditionViolation);
}

TEST(Reverse, PalindromeAndInvolution) {
  const auto s = strang({"A", "B"});
  EXPECT_EQ(reverse(s).stages(), s.stages());
  const auto w = custom_w2(solve_w2(-0.3).a);
  EXPECT_EQ(reverse(reverse(w)).stages(), w.stages());
  EXPECT_NE(reverse(w).stages(), w.stages());
}

TEST(Compose, WithEmptyFormula) {
  const auto s = strang({"A", "B"});
  EXPECT_EQ(compose(s, 1.0, ProductFormula(), 0.0).stages(), s.stages());
}

TEST(Compose, TwoHalfStrangSteps) {
  const auto s = strang({"A", "B"});
  const auto c = compose(s, 0.5, s, 0.5);
  EXPECT_EQ(c.stages(),
            (Stages{{"A", 0.25}, {"B", 0.5}, {"A", 0.5}, {"B", 0.5}, {"A", 0.25}}));
  EXPECT_EQ(c.declared_order(), 2);
}

TEST(Compose, NineStageAlternatingComposite) {
  const auto w = custom_w2(solve_w2(-0.3).a);
  const auto c = compose(w, 0.5, reverse(w), 0.5);
  EXPECT_EQ(c.size(), 9u);
  EXPECT_TRUE(c.is_consistent(1e-12));
}

TEST(Compose, Errors) {
  const auto s = strang({"A", "B"});
  EXPECT_THROW(compose(s, 0.5, s, 0.6), FractionMismatch);
  EXPECT_THROW(compose(s, 0.5, strang({"A", "C"}), 0.5), LabelError);
}

TEST(StepMatrix, ZeroStepIsIdentity) {
  const auto h = build_random_two_term(2, 4, 1);
  EXPECT_LT(max_abs<double>(Matrix(step_matrix(strang({"A", "B"}), h, 0.0) -
                                   Matrix::Identity(4, 4))),
            1e-15);
}

TEST(StepMatrix, CommutingTermsAreExact) {
  const auto h = commuting_pair();
  const Matrix hm = total_dense(h);
  const auto w = custom_w2(solve_w2(-0.3).a);
  for (const auto& f : {lie_trotter({"A", "B"}), strang({"A", "B"}), suzuki4({"A", "B"}), w,
                        compose(w, 0.5, reverse(w), 0.5)}) {
    for (double s : {0.01, 0.1, 0.5}) {
      EXPECT_LT(max_abs<double>(Matrix(step_matrix(f, h, s) - expm_i<double>(hm, s))), 1e-10)
          << f.name() << " s=" << s;
    }
  }
}

TEST(StepMatrix, StrangMatchesClosedFormTwoByTwoProduct) {
  const auto h = single_qubit(0.3, 0.7);
  const double s = 0.1;
  const Matrix expect = oracle::rotation(0.3, 0, 0, 0.05) * oracle::rotation(0, 0, 0.7, 0.1) *
                        oracle::rotation(0.3, 0, 0, 0.05);
  EXPECT_LT(max_abs<double>(Matrix(step_matrix(strang({"A", "B"}), h, s) - expect)), 1e-15);
}

TEST(StepMatrix, StageZeroActsFirst) {
  // A non-palindromic formula distinguishes the two application orders.
  const auto h = single_qubit(0.3, 0.7);
  const auto f = lie_trotter({"A", "B"});
  const Matrix expect = oracle::rotation(0, 0, 0.7, 0.2) * oracle::rotation(0.3, 0, 0, 0.2);
  EXPECT_LT(max_abs<double>(Matrix(step_matrix(f, h, 0.2) - expect)), 1e-15);
}

TEST(StepMatrix, AgreesWithTaylorProductOracle) {
  const auto h = build_random_two_term(3, 6, 21);
  const auto terms = oracle_terms(h);
  for (const auto& f : {strang({"A", "B"}), suzuki4({"A", "B"}), custom_w2(solve_w2(1.5).a)}) {
    EXPECT_LT(max_abs<double>(Matrix(step_matrix(f, h, 0.07) - oracle::product(f, terms, 0.07))),
              1e-12)
        << f.name();
  }
}

TEST(StepMatrix, ReverseIsAdjointOfNegativeStep) {
  const auto h = build_random_two_term(3, 6, 4);
  const auto w = custom_w2(solve_w2(-0.3).a);
  for (const auto& f : {lie_trotter({"A", "B"}), w, suzuki4({"A", "B"})}) {
    const Matrix lhs = step_matrix(reverse(f), h, 0.13);
    const Matrix rhs = step_matrix(f, h, -0.13).adjoint();
    EXPECT_LT(max_abs<double>(Matrix(lhs - rhs)), 1e-12) << f.name();
  }
}

TEST(StepMatrix, UnknownLabel) {
  EXPECT_THROW(step_matrix(strang({"A", "C"}), build_random_two_term(2, 2, 1), 0.1), LabelError);
}

TEST(StepMatrix, DeclaredOrderMatchesSpectralErrorSlope) {
  const auto h = build_random_two_term(3, 6, 17);
  const TermPropagator<long double> prop(h);
  const auto w = custom_w2(solve_w2(-0.3).a);
  const std::vector<double> grid = {1e-1, 4.6e-2, 2.2e-2, 1e-2, 4.6e-3, 2.2e-3, 1e-3};
  for (const auto& f : {lie_trotter({"A", "B"}), strang({"A", "B"}), w}) {
    std::vector<double> err;
    for (double s : grid) {
      err.push_back(static_cast<double>(
          spectral_norm<long double>(ExtMatrix(prop.step(f, s) - prop.exact(s)))));
    }
    EXPECT_NEAR(oracle::loglog_slope(grid, err), f.declared_order() + 1, 0.15) << f.name();
  }
}

TEST(StepMatrix, SuzukiFourthOrderSlope) {
  const auto h = build_random_two_term(3, 6, 17);
  const TermPropagator<long double> prop(h);
  const auto f = suzuki4({"A", "B"});
  const std::vector<double> grid = {1e-1, 6e-2, 4e-2, 2.5e-2, 1.5e-2, 1e-2};
  std::vector<double> err;
  for (double s : grid) {
    err.push_back(static_cast<double>(
        spectral_norm<long double>(ExtMatrix(prop.step(f, s) - prop.exact(s)))));
  }
  EXPECT_NEAR(oracle::loglog_slope(grid, err), 5.0, 0.15);
}

TEST(TermPropagator, PhaseBound) {
  const auto h = single_qubit(0.3, 0.7);
  const TermPropagator<double> prop(h);
  EXPECT_NEAR(prop.term_norm("A"), 0.3, 1e-15);
  EXPECT_NEAR(prop.phase_bound(strang({"A", "B"}), 2.0), 2.0 * (0.3 + 0.7), 1e-14);
}

}  // namespace
}  // namespace trotterbench
