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

#include "rainbow/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "rainbow/sampling.hpp"

namespace rainbow::kernels {
namespace {

constexpr std::size_t kChunk = 64;

bool rainbow_on(const VertexSet& e, const std::vector<Color>& color) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (color[e[i]] == color[e[j]]) return false;
    }
  }
  return true;
}

std::uint32_t untouched_for_trial(const Hypergraph& h, int q, double p, std::uint64_t seed,
                                  std::uint64_t trial) {
  RngStream rng(seed, trial);
  const ColoredSet w = sample_colored_p(h.num_vertices(), p, q, rng);
  const std::vector<Color> color = w.dense(h.num_vertices());
  std::uint32_t count = 0;
  for (const auto& e : h.edges()) {
    if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return color[v] != kNoColor; })) ++count;
  }
  return count;
}

std::uint8_t uncovered_for_trial(const Hypergraph& h, int q, double alpha, std::uint64_t seed,
                                 std::uint64_t trial) {
  RngStream rng(seed, trial);
  const ColoredSet y = sample_colored_p(h.num_vertices(), alpha, q, rng);
  return contains_rainbow_edge(h, y) ? 0 : 1;
}

struct PairWeights {
  std::vector<double> power;  // (1-p)^k, k = 0..2r
  explicit PairWeights(int r, double p) : power(2 * r + 1) {
    for (int k = 0; k <= 2 * r; ++k) power[k] = std::pow(1.0 - p, k);
  }
};

// Adds the contributions of lift a paired with every lift.
void accumulate_row(const Hypergraph& h, const std::vector<LiftedEdge>& lifts, std::size_t a,
                    const PairWeights& w, int r, CompensatedSum& colored, CompensatedSum& vertex) {
  const auto& ea = h.edge(lifts[a].base);
  const auto& ca = lifts[a].colors;
  for (const auto& other : lifts) {
    const auto& eb = h.edge(other.base);
    const auto& cb = other.colors;
    int shared_vertices = 0;
    int shared_elements = 0;
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
      if (ea[i] < eb[j]) {
        ++i;
      } else if (eb[j] < ea[i]) {
        ++j;
      } else {
        ++shared_vertices;
        if (ca[i] == cb[j]) ++shared_elements;
        ++i;
        ++j;
      }
    }
    if (shared_elements > 0) colored.add(w.power[2 * r - shared_elements]);
    if (shared_vertices > 0) vertex.add(w.power[2 * r - shared_vertices]);
  }
}

void check_pair_input(const Hypergraph& h, double p) {
  if (!h.is_uniform()) throw std::invalid_argument("pair sums need a uniform hypergraph");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
}

}  // namespace

TrialHit hitting_time_for_trial(const Hypergraph& h, int q, std::uint64_t master_seed,
                                std::uint64_t trial) {
  const std::size_t n = h.num_vertices();
  RngStream rng(master_seed, trial);
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = i + rng.uniform_below(n - i);
    std::swap(order[i], order[j]);
  }
  std::vector<std::uint32_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<std::uint32_t>(i);
  std::vector<Color> color(n);
  for (std::size_t v = 0; v < n; ++v) {
    color[v] = static_cast<Color>(1 + rng.uniform_below(static_cast<std::uint64_t>(q)));
  }
  const auto never = static_cast<std::uint32_t>(n + 1);
  TrialHit out{never, never};
  for (const auto& e : h.edges()) {
    std::uint32_t last = 0;
    for (Vertex v : e) last = std::max(last, position[v] + 1);
    out.uncolored = std::min(out.uncolored, last);
    if (last < out.colored && rainbow_on(e, color)) out.colored = last;
  }
  return out;
}

std::vector<TrialHit> hitting_times(const Hypergraph& h, int q, std::uint64_t master_seed,
                                    std::uint64_t first_trial, std::size_t trials) {
  if (q < 1) throw std::invalid_argument("need at least one color");
  std::vector<TrialHit> out(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < count; ++t) {
    out[t] = hitting_time_for_trial(h, q, master_seed, first_trial + static_cast<std::uint64_t>(t));
  }
  return out;
}

std::vector<std::uint32_t> untouched_edge_counts(const Hypergraph& h, int q, double p,
                                                 std::uint64_t master_seed, std::size_t trials) {
  std::vector<std::uint32_t> out(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < count; ++t) {
    out[t] = untouched_for_trial(h, q, p, master_seed, static_cast<std::uint64_t>(t));
  }
  return out;
}

std::vector<std::uint8_t> uncovered_indicators(const Hypergraph& h, int q, double alpha,
                                               std::uint64_t master_seed, std::size_t trials) {
  std::vector<std::uint8_t> out(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < count; ++t) {
    out[t] = uncovered_for_trial(h, q, alpha, master_seed, static_cast<std::uint64_t>(t));
  }
  return out;
}

PairSums delta_pair_sums(const Hypergraph& h, const std::vector<LiftedEdge>& lifts, double p) {
  check_pair_input(h, p);
  const int r = h.r_bound();
  const PairWeights weights(r, p);
  const std::size_t chunks = (lifts.size() + kChunk - 1) / kChunk;
  std::vector<CompensatedSum> colored(chunks), vertex(chunks);
  const auto count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < count; ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
    const std::size_t end = std::min(lifts.size(), begin + kChunk);
    for (std::size_t a = begin; a < end; ++a) {
      accumulate_row(h, lifts, a, weights, r, colored[c], vertex[c]);
    }
  }
  CompensatedSum total_colored, total_vertex;
  for (std::size_t c = 0; c < chunks; ++c) {
    total_colored.add(colored[c]);
    total_vertex.add(vertex[c]);
  }
  return {total_colored.value(), total_vertex.value()};
}

namespace serial {

std::vector<TrialHit> hitting_times(const Hypergraph& h, int q, std::uint64_t master_seed,
                                    std::uint64_t first_trial, std::size_t trials) {
  std::vector<TrialHit> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) out.push_back(hitting_time_for_trial(h, q, master_seed, first_trial + t));
  return out;
}

std::vector<std::uint32_t> untouched_edge_counts(const Hypergraph& h, int q, double p,
                                                 std::uint64_t master_seed, std::size_t trials) {
  std::vector<std::uint32_t> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) out.push_back(untouched_for_trial(h, q, p, master_seed, t));
  return out;
}

std::vector<std::uint8_t> uncovered_indicators(const Hypergraph& h, int q, double alpha,
                                               std::uint64_t master_seed, std::size_t trials) {
  std::vector<std::uint8_t> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) out.push_back(uncovered_for_trial(h, q, alpha, master_seed, t));
  return out;
}

PairSums delta_pair_sums(const Hypergraph& h, const std::vector<LiftedEdge>& lifts, double p) {
  check_pair_input(h, p);
  const int r = h.r_bound();
  const PairWeights weights(r, p);
  CompensatedSum colored, vertex;
  for (std::size_t a = 0; a < lifts.size(); ++a) accumulate_row(h, lifts, a, weights, r, colored, vertex);
  return {colored.value(), vertex.value()};
}

}  // namespace serial
}  // namespace rainbow::kernels
