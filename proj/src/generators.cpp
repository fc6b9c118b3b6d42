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

#include "rainbow/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace rainbow {
namespace {

using EdgeSetHash = boost::hash<VertexSet>;

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt big_pow(const BigInt& base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void check_edge_budget(const BigInt& count, const GeneratorLimits& limits) {
  if (count > BigInt(limits.max_edges)) {
    throw std::invalid_argument("instance would have " + count.str() +
                                " edges, above the generator limit of " +
                                std::to_string(limits.max_edges));
  }
}

std::size_t choose_size(int n, int k) { return static_cast<std::size_t>(binomial_coefficient(n, k)); }

// The image of `structure` under a vertex permutation, as sorted ground-set ids.
VertexSet image_ids(const std::vector<VertexSet>& structure, const std::vector<Vertex>& perm, int n) {
  VertexSet ids;
  ids.reserve(structure.size());
  VertexSet mapped;
  for (const auto& e : structure) {
    mapped.clear();
    for (Vertex v : e) mapped.push_back(perm[v]);
    std::sort(mapped.begin(), mapped.end());
    ids.push_back(static_cast<Vertex>(subset_rank(mapped, n)));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool is_connected(const std::vector<VertexSet>& edges, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges) {
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  }
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

void validate_structure(const std::vector<VertexSet>& s, int n, int k, const char* what) {
  if (n < k || (n - 1) % (k - 1) != 0) {
    throw std::invalid_argument(std::string(what) + " needs (k-1) | (n-1)");
  }
  const std::size_t want = static_cast<std::size_t>((n - 1) / (k - 1));
  if (s.size() != want) {
    throw std::invalid_argument(std::string(what) + " on " + std::to_string(n) + " vertices needs " +
                                std::to_string(want) + " edges");
  }
  std::set<VertexSet> seen;
  for (const auto& e : s) {
    if (static_cast<int>(e.size()) != k) throw std::invalid_argument(std::string(what) + " edge of wrong size");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= static_cast<Vertex>(n)) throw std::invalid_argument(std::string(what) + " vertex out of range");
      if (i > 0 && e[i - 1] >= e[i]) throw std::invalid_argument(std::string(what) + " edge not sorted");
    }
    if (!seen.insert(e).second) throw std::invalid_argument(std::string(what) + " repeats an edge");
  }
  // Connected with m(k-1)+1 vertices means every new edge meets the rest in one vertex.
  if (!is_connected(s, n)) throw std::invalid_argument(std::string(what) + " is not connected");
}

std::uint64_t automorphism_count(const std::vector<VertexSet>& structure, int n) {
  std::set<VertexSet> original(structure.begin(), structure.end());
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  VertexSet mapped;
  do {
    bool same = true;
    for (const auto& e : structure) {
      mapped.clear();
      for (Vertex v : e) mapped.push_back(perm[v]);
      std::sort(mapped.begin(), mapped.end());
      if (!original.count(mapped)) {
        same = false;
        break;
      }
    }
    if (same) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Hypergraph copies_of(const std::vector<VertexSet>& structure, int n, int k, const GeneratorLimits& limits) {
  if (n > limits.max_permutation_n) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the permutation limit " +
                                std::to_string(limits.max_permutation_n));
  }
  std::unordered_set<VertexSet, EdgeSetHash> seen;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    seen.insert(image_ids(structure, perm, n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<VertexSet> edges(seen.begin(), seen.end());
  std::sort(edges.begin(), edges.end());
  return Hypergraph(choose_size(n, k), std::move(edges), static_cast<int>(structure.size()));
}

}  // namespace

std::string StructureSpec::to_string() const {
  const std::string prefix = source.empty() ? "" : source + ",";
  switch (kind) {
    case StructureKind::kHamiltonCycle: return "hamilton:n=" + std::to_string(n);
    case StructureKind::kPerfectMatching: return "pm:n=" + std::to_string(n) + ",k=" + std::to_string(k);
    case StructureKind::kLooseHamilton: return "loose:n=" + std::to_string(n) + ",k=" + std::to_string(k);
    case StructureKind::kTreeCopies: return "tree:" + prefix + "n=" + std::to_string(n);
    case StructureKind::kCactusCopies:
      return "cactus:" + prefix + "n=" + std::to_string(n) + ",k=" + std::to_string(k);
  }
  return "?";
}

std::size_t subset_rank(const VertexSet& subset, int n) {
  const int k = static_cast<int>(subset.size());
  std::size_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    const int a = static_cast<int>(subset[i]);
    if (a <= prev || a >= n) throw std::invalid_argument("subset_rank needs a sorted subset of [n]");
    for (int x = prev + 1; x < a; ++x) rank += choose_size(n - 1 - x, k - 1 - i);
    prev = a;
  }
  return rank;
}

VertexSet subset_unrank(std::size_t rank, int n, int k) {
  VertexSet out;
  int x = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      const std::size_t block = choose_size(n - 1 - x, k - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    out.push_back(static_cast<Vertex>(x));
    ++x;
  }
  return out;
}

void validate(const StructureSpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  switch (spec.kind) {
    case StructureKind::kHamiltonCycle:
      if (n < 3) throw std::invalid_argument("Hamilton cycles need n >= 3");
      break;
    case StructureKind::kPerfectMatching:
      if (k < 1 || n < 1 || n % k != 0) throw std::invalid_argument("perfect matchings need k | n");
      break;
    case StructureKind::kLooseHamilton:
      if (k < 3) throw std::invalid_argument("loose Hamilton cycles need k >= 3");
      if (n % (k - 1) != 0) throw std::invalid_argument("loose Hamilton cycles need (k-1) | n");
      if (n / (k - 1) < 3) throw std::invalid_argument("loose Hamilton cycles need at least 3 edges");
      break;
    case StructureKind::kTreeCopies:
      if (k != 2) throw std::invalid_argument("trees are 2-uniform");
      validate_structure(spec.structure, n, 2, "tree");
      break;
    case StructureKind::kCactusCopies:
      if (k < 2) throw std::invalid_argument("cacti need k >= 2");
      validate_structure(spec.structure, n, k, "cactus");
      break;
  }
}

std::vector<VertexSet> named_tree(const std::string& name, int n) {
  std::vector<VertexSet> out;
  if (name == "path") {
    for (int i = 0; i + 1 < n; ++i) out.push_back({Vertex(i), Vertex(i + 1)});
  } else if (name == "star") {
    for (int i = 1; i < n; ++i) out.push_back({0, Vertex(i)});
  } else {
    throw std::invalid_argument("unknown tree '" + name + "' (path, star, file=...)");
  }
  return out;
}

std::vector<VertexSet> named_cactus(const std::string& name, int n, int k) {
  if (k < 2 || (n - 1) % (k - 1) != 0) throw std::invalid_argument("cactus needs (k-1) | (n-1)");
  const int m = (n - 1) / (k - 1);
  std::vector<VertexSet> out;
  for (int e = 0; e < m; ++e) {
    VertexSet edge;
    if (name == "path") {
      for (int j = 0; j < k; ++j) edge.push_back(Vertex(e * (k - 1) + j));
    } else if (name == "star") {
      edge.push_back(0);
      for (int j = 1; j < k; ++j) edge.push_back(Vertex(e * (k - 1) + j));
    } else {
      throw std::invalid_argument("unknown cactus '" + name + "' (path, star, file=...)");
    }
    out.push_back(std::move(edge));
  }
  return out;
}

StructureSpec parse_structure_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("structure spec needs 'kind:params'");
  const std::string kind = text.substr(0, colon);
  StructureSpec spec;
  std::string name;
  std::string file;
  bool have_k = false;
  std::stringstream params(text.substr(colon + 1));
  std::string token;
  while (std::getline(params, token, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      name = token;
      continue;
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "n") {
        spec.n = std::stoi(value);
      } else if (key == "k") {
        spec.k = std::stoi(value);
        have_k = true;
      } else if (key == "file") {
        file = value;
      } else {
        throw std::invalid_argument("unknown parameter '" + key + "'");
      }
    } catch (const std::logic_error& e) {
      throw std::invalid_argument("bad value in '" + token + "': " + e.what());
    }
  }
  if (spec.n <= 0) throw std::invalid_argument("structure spec needs n");
  if (kind == "hamilton") {
    spec.kind = StructureKind::kHamiltonCycle;
  } else if (kind == "pm") {
    spec.kind = StructureKind::kPerfectMatching;
  } else if (kind == "loose") {
    spec.kind = StructureKind::kLooseHamilton;
  } else if (kind == "tree" || kind == "cactus") {
    spec.kind = kind == "tree" ? StructureKind::kTreeCopies : StructureKind::kCactusCopies;
    if (kind == "tree") spec.k = 2;
    if (kind == "cactus" && !have_k) throw std::invalid_argument("cactus spec needs k");
    if (!file.empty()) {
      spec.structure = read_hypergraph_file(file).edges();
      spec.source = "file=" + file;
    } else if (kind == "tree") {
      spec.source = name.empty() ? "path" : name;
      spec.structure = named_tree(name.empty() ? "path" : name, spec.n);
    } else {
      spec.source = name.empty() ? "path" : name;
      spec.structure = named_cactus(name.empty() ? "path" : name, spec.n, spec.k);
    }
  } else {
    throw std::invalid_argument("unknown structure kind '" + kind + "'");
  }
  if ((spec.kind == StructureKind::kPerfectMatching || spec.kind == StructureKind::kLooseHamilton) &&
      !have_k) {
    throw std::invalid_argument(kind + " spec needs k");
  }
  validate(spec);
  return spec;
}

Hypergraph gen_hamilton(int n, const GeneratorLimits& limits) {
  if (n < 4 || n > limits.max_hamilton_n) {
    throw std::invalid_argument("Hamilton generator needs 4 <= n <= " + std::to_string(limits.max_hamilton_n));
  }
  // Vertex 0 first; the two traversal directions are merged by requiring
  // the second vertex to be smaller than the last.
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<VertexSet> edges;
  do {
    if (rest.front() > rest.back()) continue;
    VertexSet ids;
    Vertex prev = 0;
    for (Vertex v : rest) {
      ids.push_back(static_cast<Vertex>(pair_index(std::min(prev, v), std::max(prev, v), n)));
      prev = v;
    }
    ids.push_back(static_cast<Vertex>(pair_index(0, prev, n)));
    std::sort(ids.begin(), ids.end());
    edges.push_back(std::move(ids));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(edges.begin(), edges.end());
  return Hypergraph(choose_size(n, 2), std::move(edges), n);
}

Hypergraph gen_perfect_matching(int n, int k, const GeneratorLimits& limits) {
  StructureSpec spec{StructureKind::kPerfectMatching, n, k, {}, {}};
  validate(spec);
  check_edge_budget(count_formula(spec), limits);

  std::vector<VertexSet> edges;
  std::vector<bool> covered(n, false);
  VertexSet blocks;
  VertexSet block;
  // Pivot on the smallest uncovered vertex; pick its k-1 partners in
  // increasing order among the larger uncovered vertices.
  std::function<void()> recurse;
  std::function<void(int, int)> pick = [&](int from, int need) {
    if (need == 0) {
      for (Vertex v : block) covered[v] = true;
      blocks.push_back(static_cast<Vertex>(subset_rank(block, n)));
      VertexSet saved;
      saved.swap(block);
      recurse();
      block.swap(saved);
      blocks.pop_back();
      for (Vertex v : block) covered[v] = false;
      return;
    }
    for (int v = from; v < n; ++v) {
      if (covered[v]) continue;
      block.push_back(static_cast<Vertex>(v));
      pick(v + 1, need - 1);
      block.pop_back();
    }
  };
  recurse = [&]() {
    int pivot = 0;
    while (pivot < n && covered[pivot]) ++pivot;
    if (pivot == n) {
      VertexSet sorted = blocks;
      std::sort(sorted.begin(), sorted.end());
      edges.push_back(std::move(sorted));
      return;
    }
    covered[pivot] = true;
    block.push_back(static_cast<Vertex>(pivot));
    pick(pivot + 1, k - 1);
    block.pop_back();
    covered[pivot] = false;
  };
  recurse();
  std::sort(edges.begin(), edges.end());
  return Hypergraph(choose_size(n, k), std::move(edges), n / k);
}

Hypergraph gen_loose_hamilton(int n, int k, const GeneratorLimits& limits) {
  StructureSpec spec{StructureKind::kLooseHamilton, n, k, {}, {}};
  validate(spec);
  check_edge_budget(count_formula(spec), limits);
  const int t = n / (k - 1);

  // A loose cycle is its cyclic junction sequence j_0..j_{t-1} plus the
  // (k-2)-blocks I_i strung between j_i and j_{i+1}. Canonical form:
  // j_0 = min junction and j_1 < j_{t-1}.
  std::vector<VertexSet> edges;
  std::vector<Vertex> junction_set;
  std::vector<bool> is_junction(n, false);
  std::vector<VertexSet> inner(t);

  auto emit = [&](const std::vector<Vertex>& order) {
    VertexSet ids;
    for (int i = 0; i < t; ++i) {
      VertexSet e = inner[i];
      e.push_back(order[i]);
      e.push_back(order[(i + 1) % t]);
      std::sort(e.begin(), e.end());
      ids.push_back(static_cast<Vertex>(subset_rank(e, n)));
    }
    std::sort(ids.begin(), ids.end());
    edges.push_back(std::move(ids));
  };

  std::vector<bool> used(n, false);
  std::function<void(const std::vector<Vertex>&, int, int)> fill_blocks =
      [&](const std::vector<Vertex>& order, int block, int from) {
        if (block == t) {
          emit(order);
          return;
        }
        if (static_cast<int>(inner[block].size()) == k - 2) {
          fill_blocks(order, block + 1, 0);
          return;
        }
        for (int v = from; v < n; ++v) {
          if (used[v] || is_junction[v]) continue;
          used[v] = true;
          inner[block].push_back(static_cast<Vertex>(v));
          fill_blocks(order, block, v + 1);
          inner[block].pop_back();
          used[v] = false;
        }
      };

  std::function<void(int)> choose_junctions = [&](int from) {
    if (static_cast<int>(junction_set.size()) == t) {
      std::vector<Vertex> tail(junction_set.begin() + 1, junction_set.end());
      do {
        if (tail.front() > tail.back()) continue;
        std::vector<Vertex> order{junction_set.front()};
        order.insert(order.end(), tail.begin(), tail.end());
        fill_blocks(order, 0, 0);
      } while (std::next_permutation(tail.begin(), tail.end()));
      return;
    }
    for (int v = from; v < n; ++v) {
      junction_set.push_back(static_cast<Vertex>(v));
      is_junction[v] = true;
      choose_junctions(v + 1);
      is_junction[v] = false;
      junction_set.pop_back();
    }
  };
  choose_junctions(0);
  std::sort(edges.begin(), edges.end());
  return Hypergraph(choose_size(n, k), std::move(edges), t);
}

Hypergraph gen_tree_copies(const std::vector<VertexSet>& tree, int n, const GeneratorLimits& limits) {
  validate(StructureSpec{StructureKind::kTreeCopies, n, 2, tree, {}});
  return copies_of(tree, n, 2, limits);
}

Hypergraph gen_cactus_copies(const std::vector<VertexSet>& cactus, int n, int k, const GeneratorLimits& limits) {
  validate(StructureSpec{StructureKind::kCactusCopies, n, k, cactus, {}});
  return copies_of(cactus, n, k, limits);
}

Hypergraph generate(const StructureSpec& spec, const GeneratorLimits& limits) {
  switch (spec.kind) {
    case StructureKind::kHamiltonCycle: return gen_hamilton(spec.n, limits);
    case StructureKind::kPerfectMatching: return gen_perfect_matching(spec.n, spec.k, limits);
    case StructureKind::kLooseHamilton: return gen_loose_hamilton(spec.n, spec.k, limits);
    case StructureKind::kTreeCopies: return gen_tree_copies(spec.structure, spec.n, limits);
    case StructureKind::kCactusCopies: return gen_cactus_copies(spec.structure, spec.n, spec.k, limits);
  }
  throw std::invalid_argument("unknown structure kind");
}

BigInt count_formula(const StructureSpec& spec) {
  validate(spec);
  const int n = spec.n;
  const int k = spec.k;
  switch (spec.kind) {
    case StructureKind::kHamiltonCycle:
      return factorial(n - 1) / 2;
    case StructureKind::kPerfectMatching:
      return factorial(n) / (factorial(n / k) * big_pow(factorial(k), n / k));
    case StructureKind::kLooseHamilton:
      return BigInt(k - 1) * factorial(n) / (BigInt(2 * n) * big_pow(factorial(k - 2), n / (k - 1)));
    case StructureKind::kTreeCopies:
    case StructureKind::kCactusCopies:
      if (n > 12) throw std::invalid_argument("automorphism count limited to n <= 12");
      return factorial(n) / automorphism_count(spec.structure, n);
  }
  return 0;
}

int max_degree(const std::vector<VertexSet>& structure, int n) {
  std::vector<int> degree(n, 0);
  for (const auto& e : structure) {
    for (Vertex v : e) ++degree.at(v);
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

std::optional<double> kappa_target(const StructureSpec& spec) {
  const double n = spec.n;
  switch (spec.kind) {
    case StructureKind::kHamiltonCycle: return n / std::exp(1.0);
    case StructureKind::kPerfectMatching:
      return std::pow(n, spec.k - 1) / std::tgamma(spec.k + 1.0);
    case StructureKind::kLooseHamilton: return std::nullopt;
    case StructureKind::kTreeCopies:
    case StructureKind::kCactusCopies:
      return binomial_coefficient(spec.n - 1, spec.k - 1) / max_degree(spec.structure, spec.n);
  }
  return std::nullopt;
}

}  // namespace rainbow
