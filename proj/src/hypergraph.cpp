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

#include "rainbow/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rainbow {

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<VertexSet> edges, int r_bound)
    : num_vertices_(num_vertices), edges_(std::move(edges)), r_bound_(r_bound) {
  int largest = 0;
  for (const auto& e : edges_) {
    if (e.empty()) throw std::invalid_argument("hypergraph edge must be nonempty");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= num_vertices_) {
        throw std::out_of_range("edge vertex " + std::to_string(e[i]) + " >= N = " +
                                std::to_string(num_vertices_));
      }
      if (i > 0 && e[i - 1] >= e[i]) {
        throw std::invalid_argument("edge vertices must be strictly ascending");
      }
    }
    largest = std::max(largest, static_cast<int>(e.size()));
  }
  if (r_bound_ == 0) r_bound_ = largest;
  if (r_bound_ < 0 || largest > r_bound_) {
    throw std::invalid_argument("edge of size " + std::to_string(largest) +
                                " exceeds r = " + std::to_string(r_bound_));
  }
}

bool Hypergraph::is_uniform() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const VertexSet& e) { return static_cast<int>(e.size()) == r_bound_; });
}

int Hypergraph::min_edge_size() const {
  int out = r_bound_;
  for (const auto& e : edges_) out = std::min(out, static_cast<int>(e.size()));
  return out;
}

Hypergraph Hypergraph::canonical() const {
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return Hypergraph(num_vertices_, std::move(sorted), r_bound_);
}

Hypergraph read_hypergraph(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed hypergraph document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw std::invalid_argument("hypergraph document needs fields 'n' and 'edges'");
  }
  try {
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 0) throw std::invalid_argument("negative vertex count");
    int r = doc.contains("r") ? doc.at("r").get<int>() : 0;
    std::vector<VertexSet> edges;
    for (const auto& row : doc.at("edges")) {
      VertexSet e;
      for (const auto& v : row) {
        const auto id = v.get<std::int64_t>();
        if (id < 0) throw std::out_of_range("negative vertex id");
        e.push_back(static_cast<Vertex>(id));
      }
      std::sort(e.begin(), e.end());
      edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<std::size_t>(n), std::move(edges), r);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed hypergraph document: ") + e.what());
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open hypergraph file: " + path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h, const std::string& meta_json) {
  const Hypergraph c = h.canonical();
  // Hand-written so each edge sits on its own line.
  out << "{\n";
  if (!meta_json.empty()) out << "  \"meta\": " << meta_json << ",\n";
  out << "  \"n\": " << c.num_vertices() << ",\n";
  out << "  \"r\": " << c.r_bound() << ",\n";
  out << "  \"edges\": [";
  for (std::size_t i = 0; i < c.num_edges(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [");
    const auto& e = c.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? "," : "") << e[j];
    out << "]";
  }
  out << (c.num_edges() ? "\n  ]\n" : "]\n") << "}\n";
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h,
                           const std::string& meta_json) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write hypergraph file: " + path);
  write_hypergraph(out, h, meta_json);
}

}  // namespace rainbow
