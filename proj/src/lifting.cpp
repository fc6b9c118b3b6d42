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

#include "rainbow/lifting.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace rainbow {

ColoredSet::ColoredSet(std::vector<Assignment> assignments) : items_(std::move(assignments)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].color == kNoColor) throw std::invalid_argument("colors start at 1");
    if (i > 0 && items_[i - 1].vertex == items_[i].vertex) {
      throw std::invalid_argument("vertex " + std::to_string(items_[i].vertex) +
                                  " given two colors");
    }
  }
}

Color ColoredSet::color_of(Vertex v) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), v,
                             [](const Assignment& a, Vertex x) { return a.vertex < x; });
  return (it != items_.end() && it->vertex == v) ? it->color : kNoColor;
}

VertexSet ColoredSet::domain() const {
  VertexSet out;
  out.reserve(items_.size());
  for (const auto& a : items_) out.push_back(a.vertex);
  return out;
}

bool ColoredSet::is_rainbow() const {
  std::vector<Color> colors;
  colors.reserve(items_.size());
  for (const auto& a : items_) colors.push_back(a.color);
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

std::vector<Color> ColoredSet::dense(std::size_t n) const {
  std::vector<Color> out(n, kNoColor);
  for (const auto& a : items_) {
    if (a.vertex >= n) throw std::out_of_range("colored vertex outside ground set");
    out[a.vertex] = a.color;
  }
  return out;
}

void ColoredSet::assign(Vertex v, Color c) {
  if (c == kNoColor) throw std::invalid_argument("colors start at 1");
  auto it = std::lower_bound(items_.begin(), items_.end(), v,
                             [](const Assignment& a, Vertex x) { return a.vertex < x; });
  if (it != items_.end() && it->vertex == v) {
    if (it->color != c) throw std::invalid_argument("vertex already has a different color");
    return;
  }
  items_.insert(it, Assignment{v, c});
}

bool compatible(const ColoredSet& a, const ColoredSet& b) {
  auto i = a.assignments().begin();
  auto j = b.assignments().begin();
  while (i != a.assignments().end() && j != b.assignments().end()) {
    if (i->vertex < j->vertex) {
      ++i;
    } else if (j->vertex < i->vertex) {
      ++j;
    } else {
      if (i->color != j->color) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

ColoredSet merge(const ColoredSet& a, const ColoredSet& b) {
  if (!compatible(a, b)) throw std::invalid_argument("merging incompatible colored sets");
  std::vector<Assignment> all = a.assignments();
  all.insert(all.end(), b.assignments().begin(), b.assignments().end());
  return ColoredSet(std::move(all));
}

void write_colored_set(std::ostream& out, const ColoredSet& s) {
  for (const auto& a : s.assignments()) out << a.vertex << ' ' << a.color << '\n';
}

ColoredSet read_colored_set(std::istream& in) {
  std::vector<Assignment> items;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    long long v = -1, c = -1;
    if (!(row >> v >> c) || v < 0 || c < 1) {
      throw std::invalid_argument("bad colored-set line: " + line);
    }
    items.push_back({static_cast<Vertex>(v), static_cast<Color>(c)});
  }
  return ColoredSet(std::move(items));
}

ColoredSet as_colored_set(const Hypergraph& h, const LiftedEdge& lifted) {
  const auto& e = h.edge(lifted.base);
  std::vector<Assignment> items;
  items.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) items.push_back({e[i], lifted.colors[i]});
  return ColoredSet(std::move(items));
}

double lifted_size(const Hypergraph& h, int q) {
  double total = 0.0;
  for (const auto& e : h.edges()) total += falling_factorial(q, static_cast<int>(e.size()));
  return total;
}

namespace {

// Appends every injective map [k] -> [q] in lexicographic order.
void enumerate_injections(std::size_t base, int k, int q, std::vector<Color>& prefix,
                          std::vector<bool>& used, std::vector<LiftedEdge>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back({base, prefix});
    return;
  }
  for (int c = 1; c <= q; ++c) {
    if (used[c]) continue;
    used[c] = true;
    prefix.push_back(static_cast<Color>(c));
    enumerate_injections(base, k, q, prefix, used, out);
    prefix.pop_back();
    used[c] = false;
  }
}

}  // namespace

std::vector<LiftedEdge> lift_rainbow(const Hypergraph& h, int q, std::size_t cap) {
  if (q < h.r_bound()) throw std::invalid_argument("lifting needs q >= r");
  const double total = lifted_size(h, q);
  if (total > static_cast<double>(cap)) {
    throw CapExceeded("lifted hypergraph has " + std::to_string(total) +
                      " edges, above the materialization cap");
  }
  std::vector<LiftedEdge> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<Color> prefix;
  std::vector<bool> used(static_cast<std::size_t>(q) + 1, false);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    enumerate_injections(i, static_cast<int>(h.edge(i).size()), q, prefix, used, out);
  }
  return out;
}

double lifted_containment_count(const Hypergraph& h, int q, const ColoredSet& s) {
  if (q < h.r_bound()) throw std::invalid_argument("lifted counts need q >= r");
  if (!s.is_rainbow()) return 0.0;
  for (const auto& a : s.assignments()) {
    if (a.color > static_cast<Color>(q)) return 0.0;
  }
  const VertexSet dom = s.domain();
  const int size = static_cast<int>(s.size());
  double total = 0.0;
  for (const auto& e : h.edges()) {
    if (std::includes(e.begin(), e.end(), dom.begin(), dom.end())) {
      total += falling_factorial(q - size, static_cast<int>(e.size()) - size);
    }
  }
  return total;
}

}  // namespace rainbow
