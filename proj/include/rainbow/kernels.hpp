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

#pragma once

#include <cstdint>
#include <vector>

#include "rainbow/lifting.hpp"

// Data-parallel inner loops. Each kernel has an OpenMP version and a plain
// serial version in `serial::` that is kept as the test reference. Trial
// kernels use stream id = trial index, so results do not depend on the
// thread count; reductions combine fixed-size chunks in index order.
namespace rainbow::kernels {

// Coupled sampling for one trial: a uniform ordering of X plus one color per
// vertex. X_m is the first m vertices of the ordering.
struct TrialHit {
  // Smallest m whose prefix contains a rainbow edge; N + 1 if none.
  std::uint32_t colored = 0;
  // Smallest m whose prefix contains any edge; N + 1 if none.
  std::uint32_t uncolored = 0;
};

std::vector<TrialHit> hitting_times(const Hypergraph& h, int q, std::uint64_t master_seed,
                                    std::uint64_t first_trial, std::size_t trials);

// Per trial: number of edges avoiding W_p (colors do not matter).
std::vector<std::uint32_t> untouched_edge_counts(const Hypergraph& h, int q, double p,
                                                 std::uint64_t master_seed, std::size_t trials);

// Per trial: 1 when Y*_alpha contains no rainbow edge.
std::vector<std::uint8_t> uncovered_indicators(const Hypergraph& h, int q, double alpha,
                                               std::uint64_t master_seed, std::size_t trials);

struct PairSums {
  // Sum over ordered pairs sharing a colored element of (1-p)^{2r - |H* ∩ J*|}.
  double colored = 0.0;
  // Sum over ordered pairs sharing a vertex of (1-p)^{2r - |ξ(H*) ∩ ξ(J*)|}.
  double vertex = 0.0;
};

// Both sums by explicit enumeration of all ordered pairs (self-pairs
// included). `lifts` must come from lift_rainbow(h, q) on an r-uniform h.
PairSums delta_pair_sums(const Hypergraph& h, const std::vector<LiftedEdge>& lifts, double p);

namespace serial {

std::vector<TrialHit> hitting_times(const Hypergraph& h, int q, std::uint64_t master_seed,
                                    std::uint64_t first_trial, std::size_t trials);
std::vector<std::uint32_t> untouched_edge_counts(const Hypergraph& h, int q, double p,
                                                 std::uint64_t master_seed, std::size_t trials);
std::vector<std::uint8_t> uncovered_indicators(const Hypergraph& h, int q, double alpha,
                                               std::uint64_t master_seed, std::size_t trials);
PairSums delta_pair_sums(const Hypergraph& h, const std::vector<LiftedEdge>& lifts, double p);

}  // namespace serial

// One trial of the coupled model, exposed for tests.
TrialHit hitting_time_for_trial(const Hypergraph& h, int q, std::uint64_t master_seed,
                                std::uint64_t trial);

}  // namespace rainbow::kernels
