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

#include "rainbow/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace rainbow {

std::size_t round_half_up(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("cannot round a negative size");
  return static_cast<std::size_t>(std::floor(x + 0.5));
}

VertexSet sample_uniform_subset(std::size_t n, std::size_t m, RngStream& rng) {
  if (m > n) throw std::invalid_argument("sample size m exceeds N");
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng.uniform_below(n - i);
    std::swap(pool[i], pool[j]);
  }
  VertexSet out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet sample_binomial_subset(std::size_t n, double p, RngStream& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v) {
    if (rng.bernoulli(p)) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

namespace {

ColoredSet color_uniformly(const VertexSet& vertices, int q, RngStream& rng) {
  if (q < 1) throw std::invalid_argument("need at least one color");
  std::vector<Assignment> items;
  items.reserve(vertices.size());
  for (Vertex v : vertices) {
    items.push_back({v, static_cast<Color>(1 + rng.uniform_below(static_cast<std::uint64_t>(q)))});
  }
  return ColoredSet(std::move(items));
}

}  // namespace

ColoredSet sample_colored_m(std::size_t n, std::size_t m, int q, RngStream& rng) {
  const VertexSet vertices = sample_uniform_subset(n, m, rng);
  return color_uniformly(vertices, q, rng);
}

ColoredSet sample_colored_p(std::size_t n, double p, int q, RngStream& rng) {
  const VertexSet vertices = sample_binomial_subset(n, p, rng);
  return color_uniformly(vertices, q, rng);
}

std::size_t LiftedSample::collision_pairs() const {
  std::size_t pairs = 0;
  std::size_t i = 0;
  while (i < elements.size()) {
    std::size_t j = i;
    while (j < elements.size() && elements[j].vertex == elements[i].vertex) ++j;
    const std::size_t run = j - i;
    pairs += run * (run - 1) / 2;
    i = j;
  }
  return pairs;
}

LiftedSample sample_lifted_binomial(std::size_t n, int q, double p, RngStream& rng) {
  if (q < 1) throw std::invalid_argument("need at least one color");
  const double rate = p / q;
  if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("p/q must lie in [0, 1]");
  LiftedSample out;
  for (std::size_t v = 0; v < n; ++v) {
    for (int c = 1; c <= q; ++c) {
      if (rng.bernoulli(rate)) out.elements.push_back({static_cast<Vertex>(v), static_cast<Color>(c)});
    }
  }
  return out;
}

LiftedSample sample_lifted_uniform(std::size_t n, int q, std::size_t m, RngStream& rng) {
  if (q < 1) throw std::invalid_argument("need at least one color");
  const VertexSet cells = sample_uniform_subset(n * static_cast<std::size_t>(q), m, rng);
  LiftedSample out;
  for (Vertex cell : cells) {
    out.elements.push_back({static_cast<Vertex>(cell / q), static_cast<Color>(cell % q + 1)});
  }
  return out;
}

void write_lifted_sample(std::ostream& out, const LiftedSample& s) {
  for (const auto& a : s.elements) out << a.vertex << ' ' << a.color << '\n';
}

CollisionExpectation expected_color_collisions(std::size_t n, int q, std::size_t m) {
  const double cells = static_cast<double>(n) * q;
  if (static_cast<double>(m) > cells) throw std::invalid_argument("m exceeds N q");
  CollisionExpectation out;
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  out.approximate = nn * q * q / 2.0 * std::pow(mm / cells, 2);
  if (m >= 2) {
    out.exact = nn * (q * (q - 1) / 2.0) * (mm * (mm - 1.0)) / (cells * (cells - 1.0));
  }
  return out;
}

std::optional<std::size_t> contains_rainbow_edge(const Hypergraph& h, const ColoredSet& w) {
  const std::vector<Color> color = w.dense(h.num_vertices());
  std::vector<std::uint32_t> seen(h.r_bound() + 1);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    bool ok = true;
    seen.clear();
    for (Vertex v : e) {
      const Color c = color[v];
      if (c == kNoColor || std::find(seen.begin(), seen.end(), c) != seen.end()) {
        ok = false;
        break;
      }
      seen.push_back(c);
    }
    if (ok) return i;
  }
  return std::nullopt;
}

RestrictedLift::RestrictedLift(const Hypergraph& h, int q, ColoredSet w) : h_(&h), q_(q), w_(std::move(w)) {
  if (q < h.r_bound()) throw std::invalid_argument("restricted lift needs q >= r");
}

double RestrictedLift::edge_count(std::size_t edge) const {
  const auto& e = h_->edge(edge);
  std::vector<Color> fixed;
  for (Vertex v : e) {
    const Color c = w_.color_of(v);
    if (c == kNoColor) continue;
    if (c > static_cast<Color>(q_) || std::find(fixed.begin(), fixed.end(), c) != fixed.end()) return 0.0;
    fixed.push_back(c);
  }
  const int a = static_cast<int>(fixed.size());
  return falling_factorial(q_ - a, static_cast<int>(e.size()) - a);
}

double RestrictedLift::cardinality() const {
  CompensatedSum total;
  for (std::size_t i = 0; i < h_->num_edges(); ++i) total.add(edge_count(i));
  return total.value();
}

std::vector<LiftedEdge> RestrictedLift::materialize(std::size_t cap) const {
  if (cardinality() > static_cast<double>(cap)) {
    throw CapExceeded("restricted lift exceeds the materialization cap");
  }
  std::vector<LiftedEdge> out;
  std::vector<bool> used(static_cast<std::size_t>(q_) + 1, false);
  for (std::size_t i = 0; i < h_->num_edges(); ++i) {
    if (edge_count(i) == 0.0) continue;
    const auto& e = h_->edge(i);
    std::vector<Color> forced(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
      forced[j] = w_.color_of(e[j]);
      if (forced[j] != kNoColor) used[forced[j]] = true;
    }
    LiftedEdge current{i, std::vector<Color>(e.size(), kNoColor)};
    // Free positions take unused colors in increasing order (lexicographic output).
    auto fill = [&](auto&& self, std::size_t pos) -> void {
      if (pos == e.size()) {
        out.push_back(current);
        return;
      }
      if (forced[pos] != kNoColor) {
        current.colors[pos] = forced[pos];
        self(self, pos + 1);
        return;
      }
      for (int c = 1; c <= q_; ++c) {
        if (used[c]) continue;
        used[c] = true;
        current.colors[pos] = static_cast<Color>(c);
        self(self, pos + 1);
        used[c] = false;
      }
    };
    fill(fill, 0);
    for (Color c : forced) {
      if (c != kNoColor) used[c] = false;
    }
  }
  return out;
}

RestrictedLift restrict_lifted(const Hypergraph& h, int q, const ColoredSet& w) {
  return RestrictedLift(h, q, w);
}

}  // namespace rainbow
