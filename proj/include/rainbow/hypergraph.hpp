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
#include <span>
#include <string>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

/**
 * An r-bounded hypergraph on the ground set {0, ..., N-1}.
 *
 * Edges form a multiset: duplicates are kept and counted separately in
 * every cardinality. Each edge is a strictly ascending vertex list with
 * 1 <= |edge| <= r_bound. The object is immutable after construction.
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  // r_bound = 0 means "use the largest edge size".
  Hypergraph(std::size_t num_vertices, std::vector<VertexSet> edges, int r_bound = 0);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  int r_bound() const { return r_bound_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }

  bool is_uniform() const;
  int min_edge_size() const;

  // Edges in lexicographic order; the canonical form used by writers.
  Hypergraph canonical() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<VertexSet> edges_;
  int r_bound_ = 0;
};

// Canonical file format: a JSON document {"n": N, "r": r, "edges": [[...], ...]}.
// Readers accept edges in any order (and unsorted vertex lists); writers emit
// sorted edges in lexicographic order. Unknown top-level keys are ignored.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h, const std::string& meta_json = "");
void write_hypergraph_file(const std::string& path, const Hypergraph& h,
                           const std::string& meta_json = "");

}  // namespace rainbow
