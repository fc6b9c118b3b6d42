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

#include <optional>

#include "rainbow/hypergraph.hpp"

namespace rainbow {

inline constexpr std::size_t kDefaultSpreadCap = 20'000'000;

// H is kappa-spread when |H ∩ <S>| <= |H| / kappa^|S| for every S.
struct SpreadCertificate {
  double kappa = 0.0;
  VertexSet witness;
  std::size_t containment_count = 0;
};

struct SpreadCheck {
  bool pass = true;
  // Set when pass is false: the violator with the smallest per-set spread
  // (the one that breaks first as kappa grows), ties broken lexicographically.
  VertexSet violation;
  std::size_t containment_count = 0;
};

// Number of edges, with multiplicity, that contain every vertex of `s`.
std::size_t containment_count(const Hypergraph& h, const VertexSet& s);

// Exact maximum spread by enumerating every nonempty subset of every edge.
// Throws CapExceeded once the number of distinct candidates passes `cap`.
SpreadCertificate max_spread(const Hypergraph& h, std::size_t cap = kDefaultSpreadCap);

SpreadCheck is_kappa_spread(const Hypergraph& h, double kappa,
                            std::size_t cap = kDefaultSpreadCap);

// Appends fresh vertices (ids N, N+1, ...) to every edge shorter than r,
// one private block per edge copy, in edge order.
Hypergraph pad_to_uniform(const Hypergraph& h);

// |H| p^r for an r-uniform H.
double expected_edge_count(const Hypergraph& h, double p);

}  // namespace rainbow
