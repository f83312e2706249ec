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

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "compnum/hypotheses.hpp"

namespace compnum {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Uniform enough for instance generation and identical on every platform,
// unlike std::uniform_int_distribution.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

struct GraphDraft {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::int64_t next_id = 1;

  Vertex fresh() {
    Vertex v(next_id++);
    vertices.push_back(v);
    return v;
  }

  // Path a - f1 - ... - f(inner) - b through fresh vertices.
  void fresh_path(const Vertex& a, const Vertex& b, std::size_t inner) {
    Vertex prev = a;
    for (std::size_t i = 0; i < inner; ++i) {
      Vertex f = fresh();
      edges.push_back(make_edge(prev, f));
      prev = f;
    }
    edges.push_back(make_edge(prev, b));
  }

  Graph build() const { return Graph::build(vertices, edges); }
};

inline void check_lengths(const std::vector<std::size_t>& lengths) {
  for (auto l : lengths) {
    if (l < 4) throw PreconditionError("hole length " + std::to_string(l) + " is below 4");
  }
}

inline HypothesisReport expect_instance(const Graph& g, std::size_t omega, std::size_t h) {
  auto r = validate_hypotheses(g);
  if (!r.bound_applies() || r.omega != omega || r.h != h || (omega >= 3 && !r.K)) {
    throw GenerationError("generated instance failed validation (omega " + std::to_string(r.omega) + ", h " +
                          std::to_string(r.h) + "): " + io::to_json(g).dump());
  }
  return r;
}

}  // namespace detail

/// Clique on 1..h+1 with hole j glued on clique edge (j, j+1) through
/// lengths[j-1] - 2 fresh vertices. Missing lengths default to 4.
inline Graph gen_flower(std::size_t h, std::vector<std::size_t> lengths = {}) {
  if (h < 1) throw PreconditionError("flower needs at least one hole");
  if (lengths.size() > h) throw PreconditionError("more hole lengths than holes");
  lengths.resize(h, 4);
  detail::check_lengths(lengths);
  detail::GraphDraft d;
  for (std::size_t i = 0; i <= h; ++i) d.fresh();
  for (std::size_t i = 0; i <= h; ++i) {
    for (std::size_t j = i + 1; j <= h; ++j) d.edges.push_back(make_edge(d.vertices[i], d.vertices[j]));
  }
  for (std::size_t j = 0; j < h; ++j) d.fresh_path(d.vertices[j], d.vertices[j + 1], lengths[j] - 2);
  Graph g = d.build();
  detail::expect_instance(g, h + 1, h);
  return g;
}

/// Hole glued on the index-th clique edge (lexicographic order of edges of
/// the clique on 1..omega).
struct OnCliqueEdge {
  std::size_t index = 0;
};

/// Hole sharing exactly the given vertex with the graph built so far.
struct PendantAt {
  Vertex vertex;
};

using Attachment = std::variant<OnCliqueEdge, PendantAt>;

struct FamilySpec {
  std::size_t omega = 2;
  std::size_t h = 1;
  /// Empty means drawn from {4, 5, 6} using the seed.
  std::vector<std::size_t> hole_lengths;
  /// Empty means a random plan drawn from the seed.
  std::vector<Attachment> plan;
  std::uint64_t seed = 0;
};

/// Clique on 1..omega plus h holes attached per the plan. Throws
/// PreconditionError for infeasible specs and GenerationError when the
/// result does not validate.
inline Graph gen_family(const FamilySpec& spec) {
  if (spec.omega < 2) throw PreconditionError("omega must be at least 2");
  if (spec.omega > spec.h + 1) {
    throw PreconditionError("omega " + std::to_string(spec.omega) + " exceeds h + 1 = " + std::to_string(spec.h + 1));
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<std::size_t> lengths = spec.hole_lengths;
  if (lengths.empty()) {
    for (std::size_t j = 0; j < spec.h; ++j) lengths.push_back(4 + detail::draw(rng, 3));
  }
  if (lengths.size() != spec.h) throw PreconditionError("hole_lengths must list one length per hole");
  detail::check_lengths(lengths);

  detail::GraphDraft d;
  for (std::size_t i = 0; i < spec.omega; ++i) d.fresh();
  std::vector<Edge> clique_edges;
  for (std::size_t i = 0; i < spec.omega; ++i) {
    for (std::size_t j = i + 1; j < spec.omega; ++j) clique_edges.push_back(make_edge(d.vertices[i], d.vertices[j]));
  }
  d.edges = clique_edges;

  std::vector<Attachment> plan = spec.plan;
  if (plan.empty()) {
    std::vector<std::size_t> free_edges;
    for (std::size_t i = 0; i < clique_edges.size(); ++i) free_edges.push_back(i);
    for (std::size_t j = 0; j < spec.h; ++j) {
      if (!free_edges.empty() && detail::draw(rng, 2) == 0) {
        auto pick = detail::draw(rng, free_edges.size());
        plan.emplace_back(OnCliqueEdge{free_edges[pick]});
        free_edges.erase(free_edges.begin() + static_cast<long>(pick));
      } else {
        // Any vertex present once the earlier holes are in place.
        std::size_t present = spec.omega;
        for (std::size_t i = 0; i < j; ++i) present += lengths[i] - (std::holds_alternative<OnCliqueEdge>(plan[i]) ? 2 : 1);
        plan.emplace_back(PendantAt{Vertex(static_cast<std::int64_t>(1 + detail::draw(rng, present)))});
      }
    }
  }
  if (plan.size() != spec.h) throw PreconditionError("attachment plan must list one entry per hole");

  std::set<std::size_t> used;
  for (std::size_t j = 0; j < spec.h; ++j) {
    if (const auto* on = std::get_if<OnCliqueEdge>(&plan[j])) {
      if (on->index >= clique_edges.size()) {
        throw PreconditionError("clique edge index " + std::to_string(on->index) + " out of range");
      }
      if (!used.insert(on->index).second) {
        throw PreconditionError("clique edge " + std::to_string(on->index) + " carries two holes");
      }
      const auto& [a, b] = clique_edges[on->index];
      d.fresh_path(a, b, lengths[j] - 2);
    } else {
      const Vertex& v = std::get<PendantAt>(plan[j]).vertex;
      if (std::find(d.vertices.begin(), d.vertices.end(), v) == d.vertices.end()) {
        throw PreconditionError("pendant vertex " + v.str() + " does not exist yet");
      }
      d.fresh_path(v, v, lengths[j] - 1);
    }
  }
  Graph g = d.build();
  detail::expect_instance(g, spec.omega, spec.h);
  return g;
}

/// Random recursive spanning tree on 1..n plus extra_edges edges that close
/// no triangle. Throws GenerationError when rejection sampling gives up.
inline Graph gen_triangle_free_random(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("need at least two vertices");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> vertices;
  for (std::size_t i = 1; i <= n; ++i) vertices.emplace_back(static_cast<std::int64_t>(i));
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a][b] = adj[b][a] = 1;
    edges.push_back(make_edge(vertices[a], vertices[b]));
  };
  for (std::size_t v = 1; v < n; ++v) link(v, detail::draw(rng, v));
  const std::size_t budget = 1000 * (extra_edges + 1);
  std::size_t added = 0;
  for (std::size_t attempt = 0; added < extra_edges; ++attempt) {
    if (attempt >= budget) {
      throw GenerationError("rejection budget exhausted after " + std::to_string(budget) + " attempts with " +
                            std::to_string(added) + " of " + std::to_string(extra_edges) +
                            " extra edges; retry with another seed");
    }
    std::size_t a = detail::draw(rng, n), b = detail::draw(rng, n);
    if (a == b || adj[a][b]) continue;
    bool triangle = false;
    for (std::size_t c = 0; c < n && !triangle; ++c) triangle = adj[a][c] && adj[b][c];
    if (triangle) continue;
    link(a, b);
    ++added;
  }
  Graph g = Graph::build(vertices, edges);
  if (!is_connected(g) || !is_triangle_free(g)) throw GenerationError("generated graph is not a triangle-free tree extension");
  return g;
}

}  // namespace compnum
