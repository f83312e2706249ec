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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compnum/hypotheses.hpp"

namespace compnum {

/// Outcome of splitting a chorded cycle along one chord: either a triangle
/// inside G[V(C)] or two holes of G[V(C)] whose only common edge is the chord.
struct ChordedCycleAnalysis {
  enum class Verdict { triangle, two_holes_sharing_edge };

  Verdict verdict = Verdict::triangle;
  std::optional<Clique> triangle;
  std::optional<std::pair<Hole, Hole>> holes;
  Edge chord{0, 0};
};

/// Shortest chord-to-chord paths through each side of the cycle decide the
/// verdict: a side of length 2 closes a triangle with the chord, otherwise
/// both sides close holes. Throws PreconditionError on malformed input.
inline ChordedCycleAnalysis analyze_chorded_cycle(const Graph& g, const Cycle& c, const Edge& chord) {
  if (c.length() < 4) throw PreconditionError("cycle must have length at least 4");
  if (!c.lies_in(g)) throw PreconditionError("cycle is not a cycle of the graph");
  if (!g.has_edge(chord.first, chord.second)) {
    throw PreconditionError("chord " + to_string(chord) + " is not an edge of the graph");
  }
  auto vs = c.vertices();
  const std::size_t n = vs.size();
  auto pos_of = [&](const Vertex& v) -> std::size_t {
    auto it = std::find(vs.begin(), vs.end(), v);
    if (it == vs.end()) throw PreconditionError("chord endpoint " + v.str() + " is not on the cycle");
    return static_cast<std::size_t>(it - vs.begin());
  };
  std::size_t i = pos_of(chord.first), j = pos_of(chord.second);
  if (i > j) std::swap(i, j);
  if (j - i == 1 || (i == 0 && j == n - 1)) {
    throw PreconditionError("chord " + to_string(chord) + " joins consecutive cycle vertices");
  }
  std::vector<Vertex> side1(vs.begin() + static_cast<long>(i), vs.begin() + static_cast<long>(j) + 1);
  std::vector<Vertex> side2(vs.begin() + static_cast<long>(j), vs.end());
  side2.insert(side2.end(), vs.begin(), vs.begin() + static_cast<long>(i) + 1);

  const Edge e = make_edge(vs[i], vs[j]);
  auto through = [&](const std::vector<Vertex>& side) {
    Graph sub = g.induced(side).without_edge(e);
    const Vertex target = vs[j];
    auto p = shortest_path_avoiding(sub, vs[i], std::span<const Vertex>(&target, 1), {});
    if (!p) throw std::logic_error("cycle section lost its path");
    return *p;
  };
  Path p1 = through(side1);
  Path p2 = through(side2);

  ChordedCycleAnalysis out;
  out.chord = e;
  for (const Path* p : {&p1, &p2}) {
    if (p->length() == 2) {
      out.verdict = ChordedCycleAnalysis::Verdict::triangle;
      out.triangle = Clique::of(p->vertices);
      return out;
    }
  }
  out.verdict = ChordedCycleAnalysis::Verdict::two_holes_sharing_edge;
  out.holes.emplace(Cycle::from_sequence(p1.vertices), Cycle::from_sequence(p2.vertices));
  return out;
}

/// Hole test that only counts clique vertices on the cycle. Valid when the
/// report's hypotheses hold and it has a non-edge maximal clique K.
inline bool is_hole_by_clique_criterion(const HypothesisReport& report, const Cycle& c) {
  if (!report.K) throw PreconditionError("report has no unique non-edge maximal clique");
  std::size_t shared = 0;
  for (const auto& v : c.vertices()) shared += report.K->contains(v);
  return shared <= 2;
}

/// How to read "a K-avoiding path from v to a vertex in H".
///   literal: the terminal vertex may be any vertex of H, including one of K.
///   restricted: the terminal vertex must also lie outside V(K) - {v}.
enum class PathReading { literal, restricted };

inline const char* to_string(PathReading r) {
  return r == PathReading::literal ? "literal" : "restricted";
}

namespace detail {

// Non-clique vertices reachable from v by paths whose vertices after v avoid K.
inline std::vector<char> reach_outside_clique(const Graph& g, const Clique& K, int v) {
  std::vector<char> in_k(g.order(), 0), reach(g.order(), 0);
  for (const auto& m : K.members) in_k[g.index(m)] = 1;
  std::deque<int> queue;
  for (int w : g.neighbors(v)) {
    if (!in_k[w]) {
      reach[w] = 1;
      queue.push_back(w);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (!in_k[w] && !reach[w]) {
        reach[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return reach;
}

}  // namespace detail

/// True when a K-avoiding path (length >= 1, not an edge of K, no internal
/// vertex on K) runs from v to some vertex of H.
inline bool k_avoiding_path_exists(const Graph& g, const Clique& K, const Vertex& v, const Hole& H,
                                   PathReading reading) {
  if (!K.contains(v)) throw PreconditionError("vertex " + v.str() + " is not in the clique");
  const int vi = g.index(v);
  auto reach = detail::reach_outside_clique(g, K, vi);
  for (const auto& x : H.vertices()) {
    const int xi = g.index(x);
    if (reach[xi]) return true;
    if (reading == PathReading::literal && x != v && K.contains(x)) {
      for (int w : g.neighbors(xi)) {
        if (reach[w]) return true;
      }
    }
  }
  return false;
}

/// True when v is a cut vertex and, in G - v, no component holds both a
/// vertex of K - v and a vertex of H - v.
inline bool separates_clique_from_hole(const Graph& g, const Clique& K, const Vertex& v, const Hole& H) {
  if (!is_cut_vertex(g, v)) return false;
  const Vertex removed[] = {v};
  Graph rest = g.without_vertices(removed);
  auto comps = connected_components(rest);
  for (const auto& comp : comps) {
    bool has_k = false, has_h = false;
    for (const auto& x : comp) {
      has_k = has_k || K.contains(x);
      has_h = has_h || H.contains(x);
    }
    if (has_k && has_h) return false;
  }
  return true;
}

/// Bipartite multigraph between the clique vertices and the holes; an edge
/// of multiplicity 1 or 2 records a K-avoiding path, 2 when the vertex
/// alone separates the rest of K from the hole.
struct AvoidanceGraph {
  std::vector<Vertex> clique_side;
  std::vector<Hole> hole_side;
  std::vector<std::vector<int>> multiplicity;  // [clique vertex][hole]
  PathReading reading = PathReading::restricted;

  int vertex_degree(std::size_t i) const {
    int d = 0;
    for (int r : multiplicity[i]) d += r;
    return d;
  }

  int hole_degree(std::size_t j) const {
    int d = 0;
    for (const auto& row : multiplicity) d += row[j];
    return d;
  }

  int edge_count() const {
    int d = 0;
    for (std::size_t i = 0; i < clique_side.size(); ++i) d += vertex_degree(i);
    return d;
  }
};

inline AvoidanceGraph build_avoidance_graph(const Graph& g, const HypothesisReport& report,
                                            PathReading reading = PathReading::restricted) {
  if (!report.K) throw PreconditionError("report has no unique non-edge maximal clique");
  if (!report.hypotheses_hold()) throw PreconditionError("hypotheses do not hold");
  const Clique& K = *report.K;
  AvoidanceGraph b;
  b.clique_side = K.members;
  b.hole_side = report.holes;
  b.reading = reading;
  for (const auto& v : K.members) {
    std::vector<int> row;
    for (const auto& H : report.holes) {
      int r = 0;
      if (k_avoiding_path_exists(g, K, v, H, reading)) r = separates_clique_from_hole(g, K, v, H) ? 2 : 1;
      row.push_back(r);
    }
    b.multiplicity.push_back(std::move(row));
  }
  return b;
}

enum class LemmaCondition { a, b };

inline const char* to_string(LemmaCondition c) { return c == LemmaCondition::a ? "a" : "b"; }

/// No vertex of K met condition (a) or (b). Carries the offending instance.
class LemmaCondViolation : public std::runtime_error {
 public:
  explicit LemmaCondViolation(Graph instance)
      : std::runtime_error("no clique vertex satisfies condition (a) or (b); instance: " +
                           io::to_json(instance).dump()),
        instance_(std::move(instance)) {}

  const Graph& instance() const noexcept { return instance_; }

 private:
  Graph instance_;
};

struct CliqueVertexSelection {
  Vertex vertex;
  LemmaCondition condition;
  /// For condition (b): the hole sharing an edge of K with the vertex.
  std::optional<Hole> hole;
  std::optional<Edge> shared_edge;
};

/// First clique vertex (identifier order) with no K-avoiding path to any
/// hole (condition a), else the first one lying on an edge shared by K and
/// a hole and on no other hole (condition b). Requires omega = |K| = h + 1.
inline CliqueVertexSelection select_clique_vertex(const Graph& g, const HypothesisReport& report) {
  if (!report.hypotheses_hold() || !report.K) {
    throw PreconditionError("selection needs the hypotheses and a unique non-edge maximal clique");
  }
  if (report.K->size() != report.h + 1 || report.omega != report.h + 1) {
    throw PreconditionError("selection needs |K| = omega = h + 1");
  }
  const Clique& K = *report.K;
  for (const auto& v : K.members) {
    bool blocked = std::none_of(report.holes.begin(), report.holes.end(), [&](const Hole& H) {
      return k_avoiding_path_exists(g, K, v, H, PathReading::literal);
    });
    if (blocked) return {v, LemmaCondition::a, std::nullopt, std::nullopt};
  }
  for (const auto& v : K.members) {
    std::vector<const Hole*> on;
    for (const auto& H : report.holes) {
      if (H.contains(v)) on.push_back(&H);
    }
    if (on.size() != 1) continue;
    for (const auto& u : K.members) {
      Edge e = make_edge(v, u);
      if (u != v && on.front()->has_edge(e)) return {v, LemmaCondition::b, *on.front(), e};
    }
  }
  throw LemmaCondViolation(g);
}

struct EdgeRemovalHoles {
  std::vector<Hole> holes_after;
  /// Holes of G - e that are not holes of G.
  std::vector<Hole> new_holes;
};

inline EdgeRemovalHoles edge_removal_hole_report(const Graph& g, const HypothesisReport& report,
                                                 const Edge& e) {
  const Edge ne = make_edge(e.first, e.second);
  bool on_hole = std::any_of(report.holes.begin(), report.holes.end(),
                             [&](const Hole& H) { return H.has_edge(ne); });
  if (!on_hole) throw PreconditionError("edge " + to_string(ne) + " lies on no hole");
  EdgeRemovalHoles out;
  out.holes_after = enumerate_holes(g.without_edge(ne));
  for (const auto& H : out.holes_after) {
    if (!std::binary_search(report.holes.begin(), report.holes.end(), H)) out.new_holes.push_back(H);
  }
  return out;
}

}  // namespace compnum
