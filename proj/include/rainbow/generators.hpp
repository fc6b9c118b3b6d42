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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/hypergraph.hpp"

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;

// Application hypergraphs. The ground set is either the edges of K_n
// (k = 2) or all k-subsets of [n], indexed in lexicographic order.
enum class StructureKind { kHamiltonCycle, kPerfectMatching, kLooseHamilton, kTreeCopies, kCactusCopies };

struct StructureSpec {
  StructureKind kind = StructureKind::kHamiltonCycle;
  int n = 0;
  int k = 2;
  // Template structure on [n] for tree/cactus copies.
  std::vector<VertexSet> structure;
  std::string source;  // "path", "star" or "file=PATH" for tree/cactus

  std::string to_string() const;
};

struct GeneratorLimits {
  int max_hamilton_n = 9;
  int max_permutation_n = 8;
  std::uint64_t max_edges = 1'000'000;
};

// Parses "hamilton:n=7", "pm:n=6,k=3", "loose:n=8,k=3", "tree:path,n=7",
// "tree:star,n=5", "tree:file=T.json,n=7", "cactus:path,n=7,k=3",
// "cactus:star,n=7,k=3", "cactus:file=C.json,n=7,k=3". Validates
// divisibility and structure shape; throws std::invalid_argument.
StructureSpec parse_structure_spec(const std::string& text);
void validate(const StructureSpec& spec);

// Lexicographic rank of a sorted k-subset of [n].
std::size_t subset_rank(const VertexSet& subset, int n);
VertexSet subset_unrank(std::size_t rank, int n, int k);
inline std::size_t pair_index(Vertex i, Vertex j, int n) { return subset_rank({i, j}, n); }

Hypergraph gen_hamilton(int n, const GeneratorLimits& limits = {});
Hypergraph gen_perfect_matching(int n, int k, const GeneratorLimits& limits = {});
Hypergraph gen_loose_hamilton(int n, int k, const GeneratorLimits& limits = {});
Hypergraph gen_tree_copies(const std::vector<VertexSet>& tree, int n, const GeneratorLimits& limits = {});
Hypergraph gen_cactus_copies(const std::vector<VertexSet>& cactus, int n, int k,
                             const GeneratorLimits& limits = {});
Hypergraph generate(const StructureSpec& spec, const GeneratorLimits& limits = {});

// Closed-form edge count. For tree and cactus copies this is n!/|Aut|, with
// |Aut| counted directly from the template.
BigInt count_formula(const StructureSpec& spec);

int max_degree(const std::vector<VertexSet>& structure, int n);

// Spread level the application needs: n/e (Hamilton), n^{k-1}/k! (matchings),
// n/Δ (trees), C(n-1,k-1)/Δ (cacti). None for loose cycles (only asymptotic).
std::optional<double> kappa_target(const StructureSpec& spec);

std::vector<VertexSet> named_tree(const std::string& name, int n);
std::vector<VertexSet> named_cactus(const std::string& name, int n, int k);

}  // namespace rainbow
