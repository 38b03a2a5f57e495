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

// Randomized invariants. Every generator is seeded so failures reproduce.

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "trotterbench/dense.hpp"
#include "trotterbench/fit.hpp"
#include "trotterbench/formula_spec.hpp"
#include "trotterbench/hamiltonian.hpp"
#include "trotterbench/sweep.hpp"

namespace trotterbench {
namespace {

Matrix random_hermitian(std::mt19937_64& rng, Eigen::Index n, double scale) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  Matrix h = (m + m.adjoint()) * 0.5;
  return h * (scale / spectral_norm<double>(h));
}

TEST(Properties, LogmInvertsExpmBelowTheBranchCut) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 16);
    const Matrix h = random_hermitian(rng, n, 1.0);
    // ||H|| s stays at most 2.5 < pi.
    const double s = 0.05 + 2.45 * std::uniform_real_distribution<double>()(rng);
    const Matrix back = logm_unitary<double>(expm_i<double>(h, s), s);
    EXPECT_LT(max_abs<double>(back - h), 1e-8) << "n=" << n << " s=" << s;
  }
}

TEST(Properties, ProductFormulasAreUnitary) {
  std::mt19937_64 rng(99);
  const std::vector<std::string> names = {"trotter1", "strang", "suzuki4", "w2:a4=-0.3",
                                          "w2p:a4=1.5", "w2w2p:a4=-0.7",
                                          "w2:a4=-0.3,branch=1"};
  for (int trial = 0; trial < 6; ++trial) {
    const auto h = build_random_two_term(3, 5, rng());
    for (const auto& n : names) {
      const double s = std::uniform_real_distribution<double>(1e-3, 0.5)(rng);
      const Matrix u = step_matrix(make_formula(n), h, s);
      EXPECT_LT(unitarity_error<double>(u), 1e-10) << n;
    }
  }
}

TEST(Properties, CommutatorAlgebra) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_hermitian(rng, 8, 1.0);
    const Matrix b = random_hermitian(rng, 8, 1.0);
    const Matrix c = random_hermitian(rng, 8, 1.0);
    EXPECT_LT(max_abs<double>(commutator<double>(a, b) + commutator<double>(b, a)), 1e-12);
    const Matrix jacobi = commutator<double>(a, commutator<double>(b, c)) +
                          commutator<double>(b, commutator<double>(c, a)) +
                          commutator<double>(c, commutator<double>(a, b));
    EXPECT_LT(max_abs<double>(jacobi), 1e-12);
    // Commutators of Hermitian matrices are anti-Hermitian.
    const Matrix ab = commutator<double>(a, b);
    EXPECT_LT(max_abs<double>(ab + ab.adjoint()), 1e-12);
    const Vector v = Vector::Random(8);
    const std::vector<const Matrix*> word = {&a, &b, &c};
    EXPECT_LT((apply_nested_commutator<double>(word, v) - nested_commutator<double>(word) * v)
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(Properties, ExpmAgreesWithTaylorOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 7);
    const Matrix h = random_hermitian(rng, n, 3.0);
    const double t = std::uniform_real_distribution<double>(-2, 2)(rng);
    EXPECT_LT(max_abs<double>(expm_i<double>(h, t) - oracle::expm_taylor(h, t)), 1e-11);
  }
}

TEST(Properties, FitSlopeIsInvariantUnderRescaling) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double p = std::uniform_real_distribution<double>(0.5, 5.0)(rng);
    const auto grid = geometric_grid(0.1, 1e-3, 9);
    std::vector<double> y;
    for (double s : grid) y.push_back(u(rng) * std::pow(s, p));
    const auto base = fit_slope(grid, y);
    const double c = u(rng) * 10;
    std::vector<double> sc, yc;
    for (double s : grid) sc.push_back(c * s);
    for (double v : y) yc.push_back(c * v);
    EXPECT_NEAR(fit_slope(sc, y).slope, base.slope, 1e-9);
    EXPECT_NEAR(fit_slope(grid, yc).slope, base.slope, 1e-9);
    EXPECT_NEAR(fit_slope(grid, yc).r_squared, base.r_squared, 1e-9);
  }
}

TEST(Properties, SweepCsvRoundTripsArbitraryValues) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> lg(-300, 300);
  std::vector<SweepRow> rows;
  const std::vector<std::string> names = {"strang", "w2:a4=-0.3,branch=1", "odd,\"name\"",
                                          "w2w2p:a4=-1e-2"};
  for (int i = 0; i < 50; ++i) {
    SweepRow r;
    r.formula = names[static_cast<std::size_t>(i) % names.size()];
    auto v = [&] { return (rng() % 2 ? 1 : -1) * std::pow(10.0, lg(rng)); };
    r.report.s = std::abs(v());
    r.report.exact_delta_e = v();
    r.report.spectral_error = std::abs(v());
    r.report.first_order_shift = v();
    r.report.predicted_delta_e = (i % 7 == 0) ? std::nan("") : v();
    r.report.overlap_deficiency = std::abs(v());
    r.report.gap = std::abs(v());
    r.report.matched_overlap = std::uniform_real_distribution<double>()(rng);
    r.flag = i % 5 == 0 ? "aliasing" : "ok";
    rows.push_back(r);
  }
  std::ostringstream out;
  write_sweep_csv(out, rows);
  std::istringstream in(out.str());
  const auto back = read_sweep_csv(in);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].formula, rows[i].formula);
    EXPECT_EQ(back[i].flag, rows[i].flag);
    EXPECT_EQ(back[i].report.exact_delta_e, rows[i].report.exact_delta_e);
    EXPECT_EQ(back[i].report.s, rows[i].report.s);
    EXPECT_EQ(back[i].report.matched_overlap, rows[i].report.matched_overlap);
    EXPECT_EQ(std::isnan(back[i].report.predicted_delta_e),
              std::isnan(rows[i].report.predicted_delta_e));
  }
}

TEST(Properties, RandomModelIsSeedDeterministic) {
  for (std::uint64_t seed : {0ull, 1ull, 7ull, 123456789ull}) {
    const auto a = build_random_two_term(4, 8, seed);
    const auto b = build_random_two_term(4, 8, seed);
    EXPECT_EQ(a.digest(), b.digest());
    EXPECT_EQ(max_abs<double>(total_dense<double>(a) - total_dense<double>(b)), 0.0);
    EXPECT_NE(a.digest(), build_random_two_term(4, 8, seed + 1).digest());
  }
}

}  // namespace
}  // namespace trotterbench
