// Copyright 2026 The qdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qdt/belief.hpp"
#include "qdt/eigensolve.hpp"
#include "qdt/hamiltonian.hpp"
#include "qdt/pauli.hpp"
#include "qdt/statevector.hpp"

namespace {

void BM_HaarState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qdt::Rng rng = qdt::make_rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdt::haar_random_state(n, rng));
  }
}
BENCHMARK(BM_HaarState)->Arg(6)->Arg(10)->Arg(12);

void BM_PauliExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qdt::Rng rng = qdt::make_rng(2);
  const qdt::Statevector psi = qdt::haar_random_state(n, rng);
  const qdt::PauliString p = qdt::random_pauli_string(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdt::pauli_expectation(psi, p));
  }
}
BENCHMARK(BM_PauliExpectation)->Arg(6)->Arg(10)->Arg(12);

void BM_SelectObservable(benchmark::State& state) {
  // One greedy selection step at the scale of the classification runs:
  // 300 candidates, 57 observables.
  qdt::Rng rng = qdt::make_rng(3);
  const std::size_t n_candidates = 300, n_observables = 57;
  std::vector<double> values(n_candidates * n_observables);
  for (double& v : values) v = 2.0 * qdt::uniform_unit(rng) - 1.0;
  std::vector<qdt::PauliString> obs;
  for (std::size_t j = 0; j < n_observables; ++j) {
    obs.push_back(qdt::random_pauli_string(8, rng));
  }
  const qdt::ObservableTable table(std::move(obs), std::move(values),
                                   n_candidates);
  const qdt::BeliefState belief = qdt::BeliefState::uniform(n_candidates);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdt::select_observable(
        belief, table, qdt::Strategy::info_optimized, rng));
  }
}
BENCHMARK(BM_SelectObservable);

void BM_BayesUpdate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  qdt::Rng rng = qdt::make_rng(4);
  const qdt::BeliefState belief = qdt::BeliefState::uniform(n);
  std::vector<double> column(n);
  for (double& c : column) c = 2.0 * qdt::uniform_unit(rng) - 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qdt::bayes_update(belief, column, qdt::ShotOutcome::plus_one));
  }
}
BENCHMARK(BM_BayesUpdate)->Arg(20)->Arg(300);

void BM_GroundState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qdt::TermList terms = qdt::build_family({qdt::Family::ising, n, {1.5}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdt::ground_state(terms, n));
  }
}
BENCHMARK(BM_GroundState)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
