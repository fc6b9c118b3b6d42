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

#include <iosfwd>
#include <optional>

#include "rainbow/lifting.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

// Random models on X = [N] and X x [q]. All samplers draw from the stream in
// a fixed order, so equal streams give equal results.

// Nearest integer, ties up. Used wherever a rate times N must become a size.
std::size_t round_half_up(double x);

// X_m: a uniform m-subset (sorted).
VertexSet sample_uniform_subset(std::size_t n, std::size_t m, RngStream& rng);

// X_p: independent inclusion with probability p.
VertexSet sample_binomial_subset(std::size_t n, double p, RngStream& rng);

// W*_m: a uniform m-subset, each vertex then colored uniformly from [q].
ColoredSet sample_colored_m(std::size_t n, std::size_t m, int q, RngStream& rng);

// W*_p: X_p with independent uniform colors.
ColoredSet sample_colored_p(std::size_t n, double p, int q, RngStream& rng);

// A subset of X x [q] that may give one vertex several colors.
struct LiftedSample {
  std::vector<Assignment> elements;  // sorted, distinct

  // Number of pairs (x,c1), (x,c2) with c1 != c2.
  std::size_t collision_pairs() const;
  bool collision_free() const { return collision_pairs() == 0; }
};

// X*_p: each of the N q pairs independently with probability p/q.
LiftedSample sample_lifted_binomial(std::size_t n, int q, double p, RngStream& rng);

// Uniform m-subset of X x [q].
LiftedSample sample_lifted_uniform(std::size_t n, int q, std::size_t m, RngStream& rng);

void write_lifted_sample(std::ostream& out, const LiftedSample& s);

struct CollisionExpectation {
  double approximate = 0.0;  // (N q^2 / 2) (m / (q N))^2
  double exact = 0.0;        // N C(q,2) m(m-1) / ((Nq)(Nq-1))
};

// Expected number of same-vertex, different-color pairs in a uniform
// m-subset of X x [q].
CollisionExpectation expected_color_collisions(std::size_t n, int q, std::size_t m);

// Lowest-index edge E with E ⊆ dom(W) and W injective on E.
std::optional<std::size_t> contains_rainbow_edge(const Hypergraph& h, const ColoredSet& w);

/**
 * The lifted edges compatible with W, i.e. {H* : H* ∪ W* is collision free}.
 *
 * Held implicitly: an edge E contributes (q - a)_{|E| - a} members when W
 * colors a = |E ∩ dom(W)| of its vertices injectively, and none otherwise.
 */
class RestrictedLift {
 public:
  RestrictedLift(const Hypergraph& h, int q, ColoredSet w);

  double edge_count(std::size_t edge) const;
  double cardinality() const;
  std::vector<LiftedEdge> materialize(std::size_t cap = kDefaultLiftCap) const;

 private:
  const Hypergraph* h_;
  int q_;
  ColoredSet w_;
};

RestrictedLift restrict_lifted(const Hypergraph& h, int q, const ColoredSet& w);

}  // namespace rainbow
