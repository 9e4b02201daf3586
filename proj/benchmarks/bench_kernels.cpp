// Copyright 2026 The ssrdual Authors
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

#include <random>

#include "ssrdual/ssrdual.hpp"

using namespace ssrdual;

namespace {

ComplexMatrix random_hermitian(std::size_t dim, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix h(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    h(r, r) = g(rng);
    for (std::size_t c = r + 1; c < dim; ++c) {
      h(r, c) = Complex(g(rng), g(rng));
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

void BM_HermitianEigen(benchmark::State& state) {
  const auto h = random_hermitian(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(16)->Arg(64);

void BM_Twirl(benchmark::State& state) {
  const FramedSystem s = system_with_frame(0.5);
  const auto all = ChargeAssignment::every_slot();
  for (auto _ : state) benchmark::DoNotOptimize(twirl(s.rho, s.fact, s.layout, all));
}
BENCHMARK(BM_Twirl);

void BM_PptReport(benchmark::State& state) {
  const FramedSystem s = system_with_frame(0.5);
  const auto all = ChargeAssignment::every_slot();
  for (auto _ : state) benchmark::DoNotOptimize(ppt_report_effective(s.rho, s.fact, s.layout, all));
}
BENCHMARK(BM_PptReport);

void BM_SivFormationWerner(benchmark::State& state) {
  const auto all = ChargeAssignment::every_slot();
  const auto n_a = local_charge_operator(QubitFactorization(2), two_qubit_layout(), Party::Alice, all);
  const auto rho = werner(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(siv_formation(rho, n_a, all));
}
BENCHMARK(BM_SivFormationWerner)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
