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

#include <sstream>

#include "doctest.h"
#include "rainbow/hypergraph.hpp"

using rainbow::Hypergraph;
using rainbow::VertexSet;

TEST_SUITE("hypergraph") {
  TEST_CASE("construction validates edges") {
    CHECK_THROWS_AS(Hypergraph(3, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1, 2}}, 2), std::invalid_argument);
  }

  TEST_CASE("r defaults to the largest edge") {
    const Hypergraph h(5, {{0}, {1, 2, 3}});
    CHECK(h.r_bound() == 3);
    CHECK_FALSE(h.is_uniform());
    CHECK(h.min_edge_size() == 1);
    const Hypergraph u(4, {{0, 1}, {2, 3}});
    CHECK(u.is_uniform());
    CHECK(Hypergraph(4, {{0, 1}}, 3).r_bound() == 3);
  }

  TEST_CASE("duplicate edges are kept") {
    const Hypergraph h(3, {{0, 1}, {0, 1}});
    CHECK(h.num_edges() == 2);
  }

  TEST_CASE("writer sorts edges and reader round-trips") {
    const Hypergraph h(6, {{3, 4}, {0, 5}, {0, 2}});
    std::ostringstream out;
    rainbow::write_hypergraph(out, h, R"({"note":"x"})");
    const std::string text = out.str();
    CHECK(text.find("[0,2],\n    [0,5],\n    [3,4]") != std::string::npos);
    std::istringstream in(text);
    const Hypergraph back = rainbow::read_hypergraph(in);
    CHECK(back == h.canonical());
    CHECK(back.r_bound() == 2);
  }

  TEST_CASE("reader accepts unsorted input and ignores unknown keys") {
    std::istringstream in(R"({"extra": [1,2], "n": 4, "edges": [[3,1],[2,0]]})");
    const Hypergraph h = rainbow::read_hypergraph(in);
    CHECK(h.num_vertices() == 4);
    CHECK(h.edge(0) == VertexSet{1, 3});
    CHECK(h.edge(1) == VertexSet{0, 2});
  }

  TEST_CASE("malformed documents are rejected") {
    for (const char* text : {"garbage", "{\"n\": 3}", "{\"n\": 3, \"edges\": [[0, \"a\"]]}",
                             "{\"n\": 3, \"edges\": [[0, 5]]}", "{\"n\": -1, \"edges\": []}",
                             "{\"n\": 3, \"edges\": [[-1]]}", "{\"n\": 3, \"r\": 1, \"edges\": [[0, 1]]}"}) {
      CAPTURE(text);
      std::istringstream in(text);
      CHECK_THROWS(rainbow::read_hypergraph(in));
    }
    CHECK_THROWS_AS(rainbow::read_hypergraph_file("/nonexistent/file.hg"), std::invalid_argument);
  }
}
