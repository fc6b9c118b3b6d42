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

#include "rainbow/spread.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace rainbow {
namespace {

using SubsetCounts = std::unordered_map<VertexSet, std::size_t, boost::hash<VertexSet>>;

constexpr double kTieTolerance = 1e-12;

// Every nonempty subset of every edge, mapped to the number of edges that
// contain it. A subset appears once per containing edge, so the tally is
// exactly |H ∩ <S>|.
SubsetCounts count_edge_subsets(const Hypergraph& h, std::size_t cap) {
  if (h.r_bound() > 30) {
    throw CapExceeded("edges of size " + std::to_string(h.r_bound()) +
                      " are too large for exact subset enumeration");
  }
  SubsetCounts counts;
  VertexSet subset;
  for (const auto& e : h.edges()) {
    const std::uint32_t full = (1u << e.size()) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      subset.clear();
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (mask & (1u << j)) subset.push_back(e[j]);
      }
      auto [it, inserted] = counts.try_emplace(subset, 0);
      ++it->second;
      if (inserted && counts.size() > cap) {
        throw CapExceeded("spread enumeration exceeds cap of " + std::to_string(cap) +
                          " candidate sets");
      }
    }
  }
  return counts;
}

double set_spread(std::size_t num_edges, std::size_t count, std::size_t size) {
  return std::pow(static_cast<double>(num_edges) / static_cast<double>(count),
                  1.0 / static_cast<double>(size));
}

// Is (value, set) a better minimizer than (best, best_set)?
bool improves(double value, const VertexSet& set, double best, const VertexSet& best_set) {
  if (value < best * (1.0 - kTieTolerance)) return true;
  if (value <= best * (1.0 + kTieTolerance)) return set < best_set;
  return false;
}

}  // namespace

std::size_t containment_count(const Hypergraph& h, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= h.num_vertices()) {
      throw std::out_of_range("vertex " + std::to_string(s[i]) + " out of range");
    }
    if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("set must be strictly ascending");
  }
  std::size_t count = 0;
  for (const auto& e : h.edges()) {
    if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++count;
  }
  return count;
}

SpreadCertificate max_spread(const Hypergraph& h, std::size_t cap) {
  if (h.num_edges() == 0) throw std::invalid_argument("max_spread of an empty hypergraph");
  const auto counts = count_edge_subsets(h, cap);
  SpreadCertificate best;
  best.kappa = INFINITY;
  for (const auto& [set, count] : counts) {
    const double value = set_spread(h.num_edges(), count, set.size());
    if (improves(value, set, best.kappa, best.witness)) {
      best.kappa = value;
      best.witness = set;
      best.containment_count = count;
    }
  }
  return best;
}

SpreadCheck is_kappa_spread(const Hypergraph& h, double kappa, std::size_t cap) {
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
  SpreadCheck out;
  if (h.num_edges() == 0) return out;
  const auto counts = count_edge_subsets(h, cap);
  const double total = static_cast<double>(h.num_edges());
  double worst = INFINITY;
  for (const auto& [set, count] : counts) {
    const double lhs = static_cast<double>(count) * std::pow(kappa, static_cast<double>(set.size()));
    if (lhs <= total * (1.0 + kTieTolerance)) continue;
    const double value = set_spread(h.num_edges(), count, set.size());
    if (out.pass || improves(value, set, worst, out.violation)) {
      out.pass = false;
      worst = value;
      out.violation = set;
      out.containment_count = count;
    }
  }
  return out;
}

Hypergraph pad_to_uniform(const Hypergraph& h) {
  const int r = h.r_bound();
  std::vector<VertexSet> edges;
  edges.reserve(h.num_edges());
  auto next = static_cast<Vertex>(h.num_vertices());
  for (const auto& e : h.edges()) {
    VertexSet padded = e;
    while (static_cast<int>(padded.size()) < r) padded.push_back(next++);
    edges.push_back(std::move(padded));
  }
  return Hypergraph(next, std::move(edges), r);
}

double expected_edge_count(const Hypergraph& h, double p) {
  if (!h.is_uniform()) throw std::invalid_argument("expected_edge_count needs a uniform hypergraph");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  return static_cast<double>(h.num_edges()) * std::pow(p, h.r_bound());
}

}  // namespace rainbow
