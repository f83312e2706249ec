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
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "compnum/graph.hpp"

namespace compnum {

/// Simple path; consecutive vertices are adjacent in the host graph.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  const Vertex& front() const { return vertices.front(); }
  const Vertex& back() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Cycle in canonical form: smallest vertex first, then the smaller of its
/// two cycle neighbors. Two cycles on the same edge set compare equal.
class Cycle {
 public:
  Cycle() = default;

  static Cycle from_sequence(std::vector<Vertex> seq) {
    if (seq.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    auto min_it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), min_it, seq.end());
    if (seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
    Cycle c;
    c.vertices_ = std::move(seq);
    return c;
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }

  bool contains(const Vertex& v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
  }

  /// Normalized edges, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      out.push_back(make_edge(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool has_edge(const Edge& e) const {
    auto es = edges();
    return std::binary_search(es.begin(), es.end(), make_edge(e.first, e.second));
  }

  /// True when `g` contains every cycle edge.
  bool lies_in(const Graph& g) const {
    std::set<Vertex> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size() || vertices_.size() < 3) return false;
    for (const auto& [a, b] : edges()) {
      if (!g.has_edge(a, b)) return false;
    }
    return true;
  }

  /// Edges of `g` joining two non-consecutive cycle vertices.
  std::vector<Edge> chords(const Graph& g) const {
    std::vector<Edge> out;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (g.has_edge(vertices_[i], vertices_[j])) out.push_back(make_edge(vertices_[i], vertices_[j]));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Chordless cycle of length at least 4.
using Hole = Cycle;

namespace detail {

inline std::vector<int> component_labels(const Graph& g, int* count = nullptr) {
  const int n = static_cast<int>(g.order());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::deque<int> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

// Lowpoint DFS over all components. Iterative so long paths do not blow the stack.
struct LowpointResult {
  std::vector<char> articulation;
  std::vector<std::pair<int, int>> bridges;
};

inline LowpointResult lowpoints(const Graph& g) {
  const int n = static_cast<int>(g.order());
  LowpointResult out;
  out.articulation.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      parent(static_cast<std::size_t>(n), -1);
  int time = 0;
  struct Frame {
    int v;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      auto& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        int w = nbrs[f.next++];
        if (disc[w] < 0) {
          parent[w] = f.v;
          if (f.v == root) ++root_children;
          disc[w] = low[w] = time++;
          stack.push_back({w, 0});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      int v = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      int p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] > disc[p]) out.bridges.emplace_back(std::min(p, v), std::max(p, v));
      if (p != root && low[v] >= disc[p]) out.articulation[p] = 1;
    }
    if (root_children >= 2) out.articulation[root] = 1;
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

}  // namespace detail

/// Partition of V(g); each component sorted, components ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  int count = 0;
  auto label = detail::component_labels(g, &count);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < g.order(); ++i) out[label[i]].push_back(g.vertex(static_cast<int>(i)));
  return out;
}

inline int component_count(const Graph& g) {
  int count = 0;
  detail::component_labels(g, &count);
  return count;
}

/// Empty and single-vertex graphs count as connected.
inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline std::vector<Vertex> cut_vertices(const Graph& g) {
  auto lp = detail::lowpoints(g);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (lp.articulation[i]) out.push_back(g.vertex(static_cast<int>(i)));
  }
  return out;
}

inline bool is_cut_vertex(const Graph& g, const Vertex& v) {
  return detail::lowpoints(g).articulation[static_cast<std::size_t>(g.index(v))] != 0;
}

inline std::vector<Edge> bridges(const Graph& g) {
  std::vector<Edge> out;
  for (auto [a, b] : detail::lowpoints(g).bridges) out.emplace_back(g.vertex(a), g.vertex(b));
  return out;
}

/// Throws GraphError(missing_edge) when e is not an edge of g.
inline bool is_cut_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.first, e.second)) {
    throw GraphError(GraphError::Kind::missing_edge, "edge " + to_string(e) + " is not in the graph");
  }
  int a = g.index(e.first), b = g.index(e.second);
  auto br = detail::lowpoints(g).bridges;
  return std::binary_search(br.begin(), br.end(), std::pair<int, int>{std::min(a, b), std::max(a, b)});
}

/// Shortest path from `from` to the nearest member of `to` whose internal
/// vertices avoid `forbidden_internal`. Endpoints are exempt from the ban.
/// Among shortest paths, returns the lexicographically smallest sequence.
/// If `from` is itself a target, the result is the one-vertex path.
inline std::optional<Path> shortest_path_avoiding(const Graph& g, const Vertex& from,
                                                  std::span<const Vertex> to,
                                                  std::span<const Vertex> forbidden_internal) {
  const int n = static_cast<int>(g.order());
  const int src = g.index(from);
  std::vector<char> forbidden(static_cast<std::size_t>(n), 0);
  for (const auto& v : forbidden_internal) {
    if (auto i = g.find(v)) forbidden[*i] = 1;
  }
  // Distances to the target set, grown backwards through allowed internal vertices.
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  for (const auto& t : to) {
    if (auto i = g.find(t); i && dist[*i] < 0) {
      dist[*i] = 0;
      queue.push_back(*i);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == src) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      if (forbidden[w] && w != src) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  if (dist[src] < 0) return std::nullopt;
  Path p;
  p.vertices.push_back(g.vertex(src));
  int cur = src;
  while (dist[cur] > 0) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1 && w != src) {
        next = w;
        break;
      }
    }
    cur = next;
    p.vertices.push_back(g.vertex(cur));
  }
  return p;
}

inline bool is_triangle_free(const Graph& g) {
  for (auto [a, b] : g.index_edges()) {
    for (int w : g.neighbors(a)) {
      if (w != b && g.adjacent(w, b)) return false;
    }
  }
  return true;
}

inline bool is_forest(const Graph& g) {
  return g.size() + static_cast<std::size_t>(component_count(g)) == g.order();
}

inline bool is_tree(const Graph& g) { return !g.empty() && is_connected(g) && is_forest(g); }

}  // namespace compnum
