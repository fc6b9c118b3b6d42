// Copyright 2026 The Rainbow Threshold Authors
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

// Serial references against the OpenMP kernels on desk-scale instances.

#include <benchmark/benchmark.h>

#include "rainbow/fragmentation.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/kernels.hpp"

using namespace rainbow;

namespace {

const Hypergraph& hc7() {
  static const Hypergraph h = gen_hamilton(7);
  return h;
}

const Hypergraph& pm8() {
  static const Hypergraph h = gen_perfect_matching(8, 2);
  return h;
}

std::vector<Fragment> hc6_fragments() {
  const Hypergraph h = gen_hamilton(6);
  std::vector<Fragment> out;
  for (const auto& lifted : lift_rainbow(h, 6)) {
    out.push_back({static_cast<std::uint32_t>(lifted.base), lifted.colors, as_colored_set(h, lifted).assignments()});
  }
  return out;
}

std::vector<Color> partial_coloring(std::size_t n, int q) {
  RngStream rng(3, 0);
  std::vector<Color> w(n, kNoColor);
  for (auto& c : w) {
    if (rng.bernoulli(0.3)) c = static_cast<Color>(1 + rng.uniform_below(q));
  }
  return w;
}

template <auto Kernel>
void hitting_times(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(hc7(), 7, 1, 0, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void untouched_counts(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(pm8(), 4, 0.1, 1, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void uncovered(benchmark::State& state) {
  static const Hypergraph g = gen_hamilton(6);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, 6, 0.8, 1, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void delta_pairs(benchmark::State& state) {
  static const Hypergraph h = gen_hamilton(5);
  static const auto lifts = lift_rainbow(h, 5);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(h, lifts, 0.05));
  state.SetItemsProcessed(state.iterations() * lifts.size() * lifts.size());
}

template <auto Kernel>
void psi(benchmark::State& state) {
  static const auto fragments = hc6_fragments();
  static const auto w = partial_coloring(15, 6);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fragments, w));
  state.SetItemsProcessed(state.iterations() * fragments.size());
}

}  // namespace

BENCHMARK(hitting_times<kernels::serial::hitting_times>)->Name("hitting_times/serial")->Arg(20000);
BENCHMARK(hitting_times<kernels::hitting_times>)->Name("hitting_times/omp")->Arg(20000);
BENCHMARK(untouched_counts<kernels::serial::untouched_edge_counts>)->Name("untouched_counts/serial")->Arg(20000);
BENCHMARK(untouched_counts<kernels::untouched_edge_counts>)->Name("untouched_counts/omp")->Arg(20000);
BENCHMARK(uncovered<kernels::serial::uncovered_indicators>)->Name("uncovered/serial")->Arg(20000);
BENCHMARK(uncovered<kernels::uncovered_indicators>)->Name("uncovered/omp")->Arg(20000);
BENCHMARK(delta_pairs<kernels::serial::delta_pair_sums>)->Name("delta_pairs/serial");
BENCHMARK(delta_pairs<kernels::delta_pair_sums>)->Name("delta_pairs/omp");
BENCHMARK(psi<serial::select_psi>)->Name("select_psi/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(psi<select_psi>)->Name("select_psi/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
