// Copyright 2026 The compnum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "compnum/compnum.hpp"
#include "oracles.hpp"

using namespace compnum;

namespace {

std::vector<Path> all_paths(const Graph& g, const Vertex& from, const std::vector<Vertex>& to,
                            const std::vector<Vertex>& forbidden) {
  std::vector<Path> out;
  std::vector<Vertex> path{from};
  std::function<void()> extend = [&]() {
    const Vertex& cur = path.back();
    if (std::find(to.begin(), to.end(), cur) != to.end()) {
      out.push_back({path});
      return;
    }
    if (path.size() > 1 && std::find(forbidden.begin(), forbidden.end(), cur) != forbidden.end()) return;
    for (const auto& w : g.neighbor_vertices(cur)) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      extend();
      path.pop_back();
    }
  };
  extend();
  return out;
}

}  // namespace

TEST(GraphBuild, FourCycle) {
  Graph g = Graph::build({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.has_edge(1, 4));
  EXPECT_TRUE(g.has_edge(4, 1));
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(GraphBuild, SingleVertex) {
  Graph g = Graph::build({1}, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.size(), 0u);
}

TEST(GraphBuild, RejectsMalformedInput) {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const GraphError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no GraphError";
    return GraphError::Kind::unknown_vertex;
  };
  EXPECT_EQ(kind_of([] { Graph::build({1, 2}, {{1, 1}}); }), GraphError::Kind::self_loop);
  EXPECT_EQ(kind_of([] { Graph::build({1, 1}, {}); }), GraphError::Kind::duplicate_vertex);
  EXPECT_EQ(kind_of([] { Graph::build({1, 2}, {{1, 2}, {2, 1}}); }), GraphError::Kind::duplicate_edge);
  EXPECT_EQ(kind_of([] { Graph::build({1, 2}, {{1, 3}}); }), GraphError::Kind::undeclared_endpoint);
  EXPECT_EQ(kind_of([] { Digraph::build({"a"}, {{"a", "a"}}); }), GraphError::Kind::self_loop);
  EXPECT_EQ(kind_of([] { Digraph::build({"a", "b"}, {{"a", "b"}, {"a", "b"}}); }),
            GraphError::Kind::duplicate_edge);
}

TEST(GraphBuild, MixedIdentifiersSortIntegersFirst) {
  Graph g = Graph::build({"b", 10, "a", 2}, {{"a", 2}});
  std::vector<Vertex> expected{2, 10, "a", "b"};
  EXPECT_TRUE(std::equal(g.vertices().begin(), g.vertices().end(), expected.begin(), expected.end()));
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(oracle::cycle_graph(4)).size(), 1u);
  auto three = connected_components(Graph::build({1, 2, 3}, {}));
  ASSERT_EQ(three.size(), 3u);
  for (const auto& c : three) EXPECT_EQ(c.size(), 1u);
  auto two = connected_components(Graph::build({1, 2, 3, 4}, {{1, 2}, {3, 4}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(two[1], (std::vector<Vertex>{3, 4}));
  EXPECT_TRUE(is_connected(Graph{}));
}

TEST(Components, SizesSumToOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(1 + trial % 10, 0.2, rng);
    std::size_t total = 0;
    for (const auto& c : connected_components(g)) total += c.size();
    EXPECT_EQ(total, g.order());
  }
}

TEST(CutVertices, Examples) {
  EXPECT_EQ(cut_vertices(oracle::path_graph(3)), (std::vector<Vertex>{2}));
  EXPECT_TRUE(cut_vertices(oracle::cycle_graph(4)).empty());
  Graph bowtie = Graph::build({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  EXPECT_EQ(cut_vertices(bowtie), (std::vector<Vertex>{3}));
}

TEST(CutVertices, MatchBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(1 + trial % 10, 0.15 + 0.05 * (trial % 6), rng);
    EXPECT_EQ(cut_vertices(g), oracle::cut_vertices_by_removal(g)) << io::to_json(g).dump();
  }
}

TEST(CutEdges, Examples) {
  EXPECT_TRUE(is_cut_edge(oracle::path_graph(3), make_edge(1, 2)));
  for (const auto& e : oracle::cycle_graph(4).edges()) EXPECT_FALSE(is_cut_edge(oracle::cycle_graph(4), e));
  EXPECT_FALSE(is_cut_edge(oracle::figure_eight(), make_edge(2, 3)));
  EXPECT_THROW(is_cut_edge(oracle::path_graph(3), make_edge(1, 3)), GraphError);
}

TEST(CutEdges, MatchBruteForce) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(1 + trial % 10, 0.15 + 0.05 * (trial % 6), rng);
    auto expected = oracle::bridges_by_removal(g);
    EXPECT_EQ(bridges(g), expected);
    for (const auto& e : g.edges()) {
      EXPECT_EQ(is_cut_edge(g, e), std::binary_search(expected.begin(), expected.end(), e));
    }
  }
}

TEST(ShortestPathAvoiding, Examples) {
  Graph p3 = oracle::path_graph(3);
  const std::vector<Vertex> to3{3}, none{}, two{2};
  auto p = shortest_path_avoiding(p3, 1, to3, none);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_FALSE(shortest_path_avoiding(p3, 1, to3, two));
  auto q = shortest_path_avoiding(oracle::cycle_graph(5), 1, to3, two);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->vertices, (std::vector<Vertex>{1, 5, 4, 3}));
}

TEST(ShortestPathAvoiding, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    Graph g = oracle::random_graph(n, 0.35, rng);
    std::vector<Vertex> vs(g.vertices().begin(), g.vertices().end());
    const Vertex from = vs[rng() % n];
    std::vector<Vertex> to{vs[rng() % n]}, forbidden;
    for (const auto& v : vs) {
      if (v != from && rng() % 3 == 0) forbidden.push_back(v);
    }
    auto paths = all_paths(g, from, to, forbidden);
    auto got = shortest_path_avoiding(g, from, to, forbidden);
    if (paths.empty()) {
      EXPECT_FALSE(got);
      continue;
    }
    ASSERT_TRUE(got);
    auto best = std::min_element(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
      return a.vertices.size() != b.vertices.size() ? a.vertices.size() < b.vertices.size()
                                                    : a.vertices < b.vertices;
    });
    EXPECT_EQ(got->vertices, best->vertices);
  }
}

TEST(CycleForm, CanonicalRotationAndReflection) {
  auto a = Cycle::from_sequence({3, 4, 1, 2});
  auto b = Cycle::from_sequence({2, 1, 4, 3});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.vertices(), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(Cycle::from_sequence({1, 5, 6, 2}).vertices(), (std::vector<Vertex>{1, 2, 6, 5}));
}

TEST(GraphJson, RoundTripAndErrors) {
  Graph g = Graph::build({1, "x", 3}, {{1, "x"}, {3, "x"}});
  const std::string text = io::to_json(g).dump();
  EXPECT_EQ(text, R"({"vertices":[1,3,"x"],"edges":[[1,"x"],[3,"x"]]})");
  EXPECT_EQ(io::parse_graph(text), g);
  EXPECT_THROW(io::parse_graph("{\"vertices\":[1,2],\"edges\":[[1,2]"), ParseError);
  EXPECT_THROW(io::parse_graph("{\"vertices\":[1.5],\"edges\":[]}"), ParseError);
  EXPECT_THROW(io::parse_graph("{\"vertices\":[1,2]}"), ParseError);
  EXPECT_THROW(io::parse_graph("{\"vertices\":[1,2],\"edges\":[[1,2,3]]}"), ParseError);
  EXPECT_THROW(io::parse_graph("{\"vertices\":[1,2],\"edges\":[[1,1]]}"), GraphError);
  try {
    io::parse_graph("{\n\"vertices\": [1,\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(GraphJson, DigraphRoundTrip) {
  Digraph d = Digraph::build({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  const std::string text = io::to_json(d).dump();
  EXPECT_EQ(text, R"({"vertices":["a","b","c"],"arcs":[["a","c"],["b","c"]]})");
  EXPECT_EQ(io::parse_digraph(text), d);
}

TEST(Dot, UsesEdgeAndArcSyntax) {
  const std::string g = io::to_dot(oracle::path_graph(2));
  EXPECT_NE(g.find("graph"), std::string::npos);
  EXPECT_NE(g.find("\"1\" -- \"2\""), std::string::npos);
  const std::string d = io::to_dot(Digraph::build({"a", "b"}, {{"a", "b"}}));
  EXPECT_NE(d.find("digraph"), std::string::npos);
  EXPECT_NE(d.find("\"a\" -> \"b\""), std::string::npos);
}
