// Copyright 2026 The nbwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "nbwalk/edge_space.hpp"
#include "nbwalk/generate.hpp"
#include "nbwalk/ihara.hpp"
#include "nbwalk/laplacian.hpp"
#include "nbwalk/linalg.hpp"
#include "nbwalk/spectra.hpp"
#include "nbwalk/walks.hpp"

namespace {

nbwalk::Graph regular_graph(std::size_t n) {
  return nbwalk::generate_test_graph(nbwalk::RegularSpec{3, n}, 7);
}

void BM_DenseSpectrum(benchmark::State& state) {
  const nbwalk::Graph g = regular_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nbwalk::nb_spectrum_dense(g));
  state.SetLabel("2m=" + std::to_string(g.volume()));
}
BENCHMARK(BM_DenseSpectrum)->Arg(16)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_ClosedFormSpectrum(benchmark::State& state) {
  const nbwalk::Graph g = regular_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nbwalk::nb_spectrum_regular(g));
}
BENCHMARK(BM_ClosedFormSpectrum)->Arg(16)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_LuDeterminant(benchmark::State& state) {
  const nbwalk::Graph g = regular_graph(static_cast<std::size_t>(state.range(0)));
  const nbwalk::Matrix m =
      nbwalk::Matrix::identity(g.volume()) - 0.3 * nbwalk::op_B(nbwalk::build_edge_space(g));
  for (auto _ : state) benchmark::DoNotOptimize(nbwalk::linalg::lu_determinant(m));
}
BENCHMARK(BM_LuDeterminant)->Arg(16)->Arg(40)->Arg(80)->Unit(benchmark::kMicrosecond);

void BM_UnweightedIhara(benchmark::State& state) {
  const nbwalk::Graph g = regular_graph(16);
  const auto us = nbwalk::default_u_grid();
  for (auto _ : state) benchmark::DoNotOptimize(nbwalk::unweighted_check(g, us));
}
BENCHMARK(BM_UnweightedIhara)->Unit(benchmark::kMillisecond);

void BM_PropagateExact(benchmark::State& state) {
  const nbwalk::Graph g = regular_graph(static_cast<std::size_t>(state.range(0)));
  const auto es = nbwalk::build_edge_space(g);
  const auto start = nbwalk::vertex_delta(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(nbwalk::propagate_exact(es, start, 100));
}
BENCHMARK(BM_PropagateExact)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_MonteCarlo(benchmark::State& state) {
  const nbwalk::Graph g = regular_graph(1000);
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nbwalk::monte_carlo_distribution(g, 0, 20, 100000, 1, threads));
  }
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ChiSquaredSeries(benchmark::State& state) {
  const auto es = nbwalk::build_edge_space(regular_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nbwalk::chi_squared_series(es, 50));
}
BENCHMARK(BM_ChiSquaredSeries)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CompareLambda1(benchmark::State& state) {
  const nbwalk::Graph g = regular_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nbwalk::compare_lambda1(g));
}
BENCHMARK(BM_CompareLambda1)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
