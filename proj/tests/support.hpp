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

// Brute-force oracles and random instance generators shared by the tests.
// Oracles deliberately avoid the library's own enumeration code.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "rainbow/hypergraph.hpp"
#include "rainbow/lifting.hpp"
#include "rainbow/rng.hpp"

namespace rainbow::testing {

inline bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

struct BruteSpread {
  double kappa = INFINITY;
  VertexSet witness;
};

// Minimum of (|H| / |H ∩ <S>|)^(1/|S|) over every nonempty S ⊆ X, found by
// walking all 2^N subsets of the ground set.
inline BruteSpread brute_max_spread(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  BruteSpread best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s = from_mask(mask);
    std::size_t count = 0;
    for (const auto& e : h.edges()) count += is_subset(s, e);
    if (count == 0) continue;
    const double k = std::pow(static_cast<double>(h.num_edges()) / count, 1.0 / s.size());
    if (k < best.kappa * (1 - 1e-12) || (k <= best.kappa * (1 + 1e-12) && s < best.witness)) {
      best.kappa = std::min(k, best.kappa);
      best.witness = s;
    }
  }
  return best;
}

// Every injective coloring of every edge, in (edge, coloring) lexicographic
// order, by counting through all q^|E| color words.
inline std::vector<ColoredSet> brute_lift(const Hypergraph& h, int q) {
  std::vector<ColoredSet> out;
  for (const auto& e : h.edges()) {
    std::vector<Color> word(e.size(), 1);
    while (true) {
      std::set<Color> distinct(word.begin(), word.end());
      if (distinct.size() == word.size()) {
        std::vector<Assignment> items;
        for (std::size_t i = 0; i < e.size(); ++i) items.push_back({e[i], word[i]});
        out.emplace_back(items);
      }
      std::size_t i = e.size();
      while (i > 0 && word[i - 1] == static_cast<Color>(q)) word[--i] = 1;
      if (i == 0) break;
      ++word[i - 1];
    }
  }
  return out;
}

inline bool colored_subset(const ColoredSet& small, const ColoredSet& big) {
  const auto& a = small.assignments();
  const auto& b = big.assignments();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Random hypergraph: n in [2, max_n], 1..max_edges edges of size 1..max_r
// (all of size r when uniform). Duplicate edges are allowed.
inline Hypergraph random_hypergraph(RngStream& rng, int max_n, int max_edges, int max_r, bool uniform) {
  const int n = 2 + static_cast<int>(rng.uniform_below(max_n - 1));
  const int r = 1 + static_cast<int>(rng.uniform_below(std::min(max_r, n)));
  const int m = 1 + static_cast<int>(rng.uniform_below(max_edges));
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) {
    const int size = uniform ? r : 1 + static_cast<int>(rng.uniform_below(r));
    VertexSet pool(n);
    for (int v = 0; v < n; ++v) pool[v] = static_cast<Vertex>(v);
    for (int j = 0; j < size; ++j) std::swap(pool[j], pool[j + rng.uniform_below(n - j)]);
    VertexSet e(pool.begin(), pool.begin() + size);
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges), r);
}

// Random colored set on [0, n) with colors in [1, q]; each vertex present
// with probability 1/2.
inline ColoredSet random_colored_set(RngStream& rng, std::size_t n, int q) {
  std::vector<Assignment> items;
  for (Vertex v = 0; v < n; ++v) {
    if (rng.bernoulli(0.5)) items.push_back({v, static_cast<Color>(1 + rng.uniform_below(q))});
  }
  return ColoredSet(std::move(items));
}

inline Hypergraph complete_graph(std::size_t n) {
  std::vector<VertexSet> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Hypergraph(n, std::move(edges));
}

// Pearson statistic against expected counts.
inline double chi_square(const std::vector<double>& observed, const std::vector<double>& expected) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    stat += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
  }
  return stat;
}

// Upper 10^-3 quantile of chi-square with `dof` degrees of freedom
// (Wilson-Hilferty), adequate for dof >= 1.
inline double chi_square_critical(int dof) {
  const double z = 3.090232306;  // standard normal 0.999 quantile
  const double k = dof;
  const double a = 2.0 / (9.0 * k);
  return k * std::pow(1.0 - a + z * std::sqrt(a), 3);
}

}  // namespace rainbow::testing
