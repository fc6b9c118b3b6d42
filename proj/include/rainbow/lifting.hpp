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
#include <utility>

#include "rainbow/hypergraph.hpp"

namespace rainbow {

inline constexpr std::size_t kDefaultLiftCap = 10'000'000;

struct Assignment {
  Vertex vertex;
  Color color;
  auto operator<=>(const Assignment&) const = default;
};

/**
 * A colored subset of X x [q] with at most one color per vertex.
 *
 * Assignments are kept in vertex order, which is also the serialization
 * order. Construction rejects a vertex given two different colors; such sets
 * lie outside the collision-free family and are modelled by LiftedSample.
 */
class ColoredSet {
 public:
  ColoredSet() = default;
  explicit ColoredSet(std::vector<Assignment> assignments);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Assignment>& assignments() const { return items_; }

  Color color_of(Vertex v) const;  // kNoColor if absent
  bool contains(Vertex v) const { return color_of(v) != kNoColor; }
  VertexSet domain() const;
  bool is_rainbow() const;

  // Dense lookup table of length n (kNoColor where unassigned).
  std::vector<Color> dense(std::size_t n) const;

  void assign(Vertex v, Color c);

  bool operator==(const ColoredSet&) const = default;

 private:
  std::vector<Assignment> items_;
};

// A and B agree in color wherever they share a vertex.
bool compatible(const ColoredSet& a, const ColoredSet& b);

// Union of two compatible sets. Throws std::invalid_argument on a clash.
ColoredSet merge(const ColoredSet& a, const ColoredSet& b);

// Lines of "vertex color".
void write_colored_set(std::ostream& out, const ColoredSet& s);
ColoredSet read_colored_set(std::istream& in);

// An edge of H together with an injective coloring of its vertices.
struct LiftedEdge {
  std::size_t base = 0;
  std::vector<Color> colors;  // parallel to h.edge(base)
  auto operator<=>(const LiftedEdge&) const = default;
};

ColoredSet as_colored_set(const Hypergraph& h, const LiftedEdge& lifted);

// |H*| = sum over edges of (q)_{|E|}.
double lifted_size(const Hypergraph& h, int q);

// Every (edge, injective coloring from [q]) pair; colorings per edge in
// lexicographic order. Throws CapExceeded when |H*| > cap.
std::vector<LiftedEdge> lift_rainbow(const Hypergraph& h, int q, std::size_t cap = kDefaultLiftCap);

// |H* ∩ <S*>| by the closed form sum over E ⊇ dom(S) of (q-s)_{|E|-s}.
// Zero when S repeats a color.
double lifted_containment_count(const Hypergraph& h, int q, const ColoredSet& s);

}  // namespace rainbow
