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

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compnum/vertex.hpp"

namespace compnum {

class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    duplicate_vertex,
    self_loop,
    duplicate_edge,
    undeclared_endpoint,
    unknown_vertex,
    missing_edge,
  };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

inline std::vector<Vertex> sorted_unique_vertices(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      throw GraphError(GraphError::Kind::duplicate_vertex,
                       "duplicate vertex " + vertices[i].str());
    }
  }
  return vertices;
}

inline std::optional<int> find_sorted(std::span<const Vertex> vertices,
                                      const Vertex& v) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - vertices.begin());
}

}  // namespace detail

/// Simple undirected graph with vertices held in identifier order.
///
/// Vertex index i refers to the i-th smallest identifier, so algorithms that
/// work on indices and break ties by smallest index also break ties by
/// smallest identifier. Immutable once built; derived graphs are new values.
class Graph {
 public:
  Graph() = default;

  /// Validates simplicity and endpoint declaration. Throws GraphError.
  static Graph build(std::vector<Vertex> vertices, std::span<const Edge> edges) {
    auto sorted = detail::sorted_unique_vertices(std::move(vertices));
    std::vector<std::pair<int, int>> index_edges;
    index_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      if (a == b) {
        throw GraphError(GraphError::Kind::self_loop, "self-loop at vertex " + a.str());
      }
      auto ia = detail::find_sorted(sorted, a);
      auto ib = detail::find_sorted(sorted, b);
      if (!ia || !ib) {
        throw GraphError(GraphError::Kind::undeclared_endpoint,
                         "edge " + a.str() + "-" + b.str() + " has undeclared endpoint " +
                             (!ia ? a : b).str());
      }
      index_edges.emplace_back(std::min(*ia, *ib), std::max(*ia, *ib));
    }
    std::sort(index_edges.begin(), index_edges.end());
    for (std::size_t i = 1; i < index_edges.size(); ++i) {
      if (index_edges[i] == index_edges[i - 1]) {
        throw GraphError(GraphError::Kind::duplicate_edge,
                         "duplicate edge " + sorted[index_edges[i].first].str() + "-" +
                             sorted[index_edges[i].second].str());
      }
    }
    return Graph(std::move(sorted), std::move(index_edges));
  }

  static Graph build(std::vector<Vertex> vertices, std::initializer_list<Edge> edges) {
    return build(std::move(vertices), std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const Vertex& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }

  std::optional<int> find(const Vertex& v) const { return detail::find_sorted(vertices_, v); }
  bool contains(const Vertex& v) const { return find(v).has_value(); }

  int index(const Vertex& v) const {
    auto i = find(v);
    if (!i) throw GraphError(GraphError::Kind::unknown_vertex, "unknown vertex " + v.str());
    return *i;
  }

  std::span<const int> neighbors(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

  bool adjacent(int i, int j) const {
    return matrix_[static_cast<std::size_t>(i) * order() + static_cast<std::size_t>(j)] != 0;
  }

  bool has_edge(const Vertex& a, const Vertex& b) const {
    auto ia = find(a);
    auto ib = find(b);
    return ia && ib && adjacent(*ia, *ib);
  }

  /// Edges as (smaller index, larger index), sorted.
  std::span<const std::pair<int, int>> index_edges() const noexcept { return edges_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (auto [a, b] : edges_) out.emplace_back(vertices_[a], vertices_[b]);
    return out;
  }

  std::vector<Vertex> neighbor_vertices(const Vertex& v) const {
    std::vector<Vertex> out;
    for (int j : neighbors(index(v))) out.push_back(vertices_[j]);
    return out;
  }

  Graph without_edges(std::span<const Edge> removed) const {
    std::vector<char> drop(edges_.size(), 0);
    for (const auto& [a, b] : removed) {
      auto ia = find(a);
      auto ib = find(b);
      if (!ia || !ib || !adjacent(*ia, *ib)) {
        throw GraphError(GraphError::Kind::missing_edge,
                         "edge " + a.str() + "-" + b.str() + " is not in the graph");
      }
      std::pair<int, int> key{std::min(*ia, *ib), std::max(*ia, *ib)};
      auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
      drop[static_cast<std::size_t>(it - edges_.begin())] = 1;
    }
    std::vector<std::pair<int, int>> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!drop[i]) kept.push_back(edges_[i]);
    }
    return Graph(vertices_, std::move(kept));
  }

  Graph without_edge(const Edge& e) const { return without_edges(std::span<const Edge>(&e, 1)); }

  /// Subgraph induced by `keep`; unknown vertices are an error.
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<int> remap(order(), -1);
    std::vector<int> chosen;
    for (const auto& v : keep) chosen.push_back(index(v));
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    std::vector<Vertex> verts;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      remap[static_cast<std::size_t>(chosen[k])] = static_cast<int>(k);
      verts.push_back(vertices_[static_cast<std::size_t>(chosen[k])]);
    }
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : edges_) {
      if (remap[a] >= 0 && remap[b] >= 0) kept.emplace_back(remap[a], remap[b]);
    }
    return Graph(std::move(verts), std::move(kept));
  }

  Graph without_vertices(std::span<const Vertex> removed) const {
    std::vector<char> drop(order(), 0);
    for (const auto& v : removed) drop[static_cast<std::size_t>(index(v))] = 1;
    std::vector<Vertex> keep;
    for (std::size_t i = 0; i < order(); ++i) {
      if (!drop[i]) keep.push_back(vertices_[i]);
    }
    return induced(keep);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  Graph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const std::size_t n = vertices_.size();
    adjacency_.assign(n, {});
    matrix_.assign(n * n, 0);
    for (auto [a, b] : edges_) {
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
      matrix_[static_cast<std::size_t>(a) * n + b] = 1;
      matrix_[static_cast<std::size_t>(b) * n + a] = 1;
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint8_t> matrix_;
};

/// Simple directed graph (no self-loops, no parallel arcs).
class Digraph {
 public:
  Digraph() = default;

  static Digraph build(std::vector<Vertex> vertices, std::span<const Arc> arcs) {
    auto sorted = detail::sorted_unique_vertices(std::move(vertices));
    std::vector<std::pair<int, int>> index_arcs;
    index_arcs.reserve(arcs.size());
    for (const auto& [a, b] : arcs) {
      if (a == b) {
        throw GraphError(GraphError::Kind::self_loop, "self-loop at vertex " + a.str());
      }
      auto ia = detail::find_sorted(sorted, a);
      auto ib = detail::find_sorted(sorted, b);
      if (!ia || !ib) {
        throw GraphError(GraphError::Kind::undeclared_endpoint,
                         "arc " + a.str() + "->" + b.str() + " has undeclared endpoint " +
                             (!ia ? a : b).str());
      }
      index_arcs.emplace_back(*ia, *ib);
    }
    std::sort(index_arcs.begin(), index_arcs.end());
    for (std::size_t i = 1; i < index_arcs.size(); ++i) {
      if (index_arcs[i] == index_arcs[i - 1]) {
        throw GraphError(GraphError::Kind::duplicate_edge,
                         "duplicate arc " + sorted[index_arcs[i].first].str() + "->" +
                             sorted[index_arcs[i].second].str());
      }
    }
    return Digraph(std::move(sorted), std::move(index_arcs));
  }

  static Digraph build(std::vector<Vertex> vertices, std::initializer_list<Arc> arcs) {
    return build(std::move(vertices), std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const Vertex& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  std::optional<int> find(const Vertex& v) const { return detail::find_sorted(vertices_, v); }
  bool contains(const Vertex& v) const { return find(v).has_value(); }

  int index(const Vertex& v) const {
    auto i = find(v);
    if (!i) throw GraphError(GraphError::Kind::unknown_vertex, "unknown vertex " + v.str());
    return *i;
  }

  std::span<const int> out_neighbors(int i) const { return out_[static_cast<std::size_t>(i)]; }
  std::span<const int> in_neighbors(int i) const { return in_[static_cast<std::size_t>(i)]; }

  bool has_arc(const Vertex& a, const Vertex& b) const {
    auto ia = find(a);
    auto ib = find(b);
    if (!ia || !ib) return false;
    return std::binary_search(arcs_.begin(), arcs_.end(), std::pair<int, int>{*ia, *ib});
  }

  std::span<const std::pair<int, int>> index_arcs() const noexcept { return arcs_; }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(arcs_.size());
    for (auto [a, b] : arcs_) out.emplace_back(vertices_[a], vertices_[b]);
    return out;
  }

  std::vector<Vertex> in_neighbor_vertices(const Vertex& v) const {
    std::vector<Vertex> out;
    for (int j : in_neighbors(index(v))) out.push_back(vertices_[j]);
    return out;
  }

  /// Vertices with empty in-neighborhood, in identifier order.
  std::vector<Vertex> sources() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < order(); ++i) {
      if (in_[i].empty()) out.push_back(vertices_[i]);
    }
    return out;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

 private:
  Digraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> arcs)
      : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (auto [a, b] : arcs_) {
      out_[a].push_back(b);
      in_[b].push_back(a);
    }
    for (auto& list : in_) std::sort(list.begin(), list.end());
  }

  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

}  // namespace compnum
