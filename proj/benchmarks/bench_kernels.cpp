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

#include <benchmark/benchmark.h>

#include "trotterbench/designer.hpp"
#include "trotterbench/expansion.hpp"
#include "trotterbench/formula.hpp"
#include "trotterbench/hamiltonian.hpp"
#include "trotterbench/spectro.hpp"

namespace tb = trotterbench;

namespace {

tb::PartitionedHamiltonian model(int qubits) {
  // 6 qubits: the 2x3 XY lattice; other sizes: random two-term models.
  if (qubits == 6) return tb::build_xy_lattice(2, 3, 0.25, 0.75);
  return tb::build_random_two_term(qubits, 20, 7);
}

void BM_SolveW2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tb::solve_w2(-0.3));
}
BENCHMARK(BM_SolveW2);

void BM_ExpandExponent(benchmark::State& state) {
  const auto f = tb::suzuki4({"A", "B"});
  for (auto _ : state) benchmark::DoNotOptimize(tb::expand_exponent(f, 3));
}
BENCHMARK(BM_ExpandExponent);

template <typename Real>
void BM_StepUnitary(benchmark::State& state) {
  const tb::TermPropagator<Real> prop(model(static_cast<int>(state.range(0))));
  const auto f = tb::w2_formula(tb::solve_w2(-0.3));
  for (auto _ : state) benchmark::DoNotOptimize(prop.step(f, 0.01));
}
BENCHMARK(BM_StepUnitary<double>)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepUnitary<long double>)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

template <typename Real>
void BM_UnitaryPhases(benchmark::State& state) {
  const tb::TermPropagator<Real> prop(model(static_cast<int>(state.range(0))));
  const auto w = prop.step(tb::strang({"A", "B"}), 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(tb::unitary_phases<Real>(w));
}
BENCHMARK(BM_UnitaryPhases<double>)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitaryPhases<long double>)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SpectroReport(benchmark::State& state) {
  const tb::Spectroscope scope(model(static_cast<int>(state.range(0))));
  const auto f = tb::strang({"A", "B"});
  for (auto _ : state) benchmark::DoNotOptimize(scope.report(f, 0.01));
}
BENCHMARK(BM_SpectroReport)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
