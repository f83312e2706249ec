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
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "compnum/cliques.hpp"
#include "compnum/io.hpp"

namespace compnum {

/// Graph on V(d) with xy an edge iff x and y share an out-neighbor.
inline Graph competition_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < d.order(); ++v) {
    auto preds = d.in_neighbors(static_cast<int>(v));
    for (std::size_t i = 0; i < preds.size(); ++i) {
      for (std::size_t j = i + 1; j < preds.size(); ++j) {
        edges.push_back(make_edge(d.vertex(preds[i]), d.vertex(preds[j])));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::build({d.vertices().begin(), d.vertices().end()}, edges);
}

struct AcyclicityResult {
  bool acyclic = false;
  /// Topological order (smallest available identifier first) when acyclic.
  std::vector<Vertex> order;
  /// A directed cycle v0 -> v1 -> ... -> v0 otherwise.
  std::vector<Vertex> cycle;
};

inline AcyclicityResult is_acyclic(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : d.index_arcs()) ++indeg[b];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(static_cast<int>(v));
  }
  AcyclicityResult out;
  std::vector<char> done(n, 0);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    done[v] = 1;
    out.order.push_back(d.vertex(v));
    for (int w : d.out_neighbors(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (out.order.size() == n) {
    out.acyclic = true;
    return out;
  }
  out.order.clear();
  // Every unfinished vertex has an unfinished in-neighbor; walking backwards must repeat.
  int cur = -1;
  for (std::size_t v = 0; v < n && cur < 0; ++v) {
    if (!done[v]) cur = static_cast<int>(v);
  }
  std::vector<int> seen_at(n, -1), walk;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    for (int p : d.in_neighbors(cur)) {
      if (!done[p]) {
        cur = p;
        break;
      }
    }
  }
  std::vector<int> back(walk.begin() + seen_at[cur], walk.end());
  std::reverse(back.begin(), back.end());
  for (int v : back) out.cycle.push_back(d.vertex(v));
  return out;
}

/// One construction step: which sub-instance it worked on and which added
/// vertices it consumed and produced.
struct TraceStep {
  std::string step;
  std::vector<Vertex> instance;
  std::vector<Vertex> consumed;
  std::vector<Vertex> produced;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Acyclic digraph D with C(D) = G plus the isolated vertices in `added`.
/// The number of added vertices is the certified upper bound on k(G).
struct Witness {
  Digraph digraph;
  std::vector<Vertex> base;
  std::vector<Vertex> added;
  std::vector<TraceStep> trace;

  std::size_t k() const noexcept { return added.size(); }

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Names `$k0`, `$k1`, ... for added vertices, skipping reserved identifiers.
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(std::span<const Vertex> reserved) : reserved_(reserved.begin(), reserved.end()) {}

  Vertex next() {
    for (;;) {
      Vertex v("$k" + std::to_string(counter_++));
      if (!reserved_.contains(v)) return v;
    }
  }

 private:
  std::set<Vertex> reserved_;
  std::size_t counter_ = 0;
};

struct VerificationReport {
  bool vertex_sets_consistent = false;
  bool acyclic = false;
  bool competition_graph_matches = false;
  std::vector<Edge> missing_edges;
  std::vector<Edge> extra_edges;
  bool added_isolated = false;
  std::vector<Vertex> non_isolated_added;
  /// Set when a common out-neighbor check was requested.
  std::optional<bool> common_out_neighbor;
  std::vector<Vertex> missing_common_arcs;
  std::vector<Vertex> directed_cycle;

  bool passed() const noexcept {
    return vertex_sets_consistent && acyclic && competition_graph_matches && added_isolated &&
           common_out_neighbor.value_or(true);
  }
};

/// Optional extra check that every clique member has an arc to `prey`.
struct CommonPreyCheck {
  Clique clique;
  Vertex prey;
};

inline VerificationReport verify_witness(const Graph& g, const Witness& w,
                                         const std::optional<CommonPreyCheck>& common_prey = std::nullopt) {
  VerificationReport r;
  {
    std::vector<Vertex> base(w.base), added(w.added);
    std::sort(base.begin(), base.end());
    std::sort(added.begin(), added.end());
    std::vector<Vertex> all;
    std::merge(base.begin(), base.end(), added.begin(), added.end(), std::back_inserter(all));
    const bool disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
    const bool base_ok = std::equal(base.begin(), base.end(), g.vertices().begin(), g.vertices().end());
    const bool union_ok = std::equal(all.begin(), all.end(), w.digraph.vertices().begin(),
                                     w.digraph.vertices().end());
    r.vertex_sets_consistent = disjoint && base_ok && union_ok;
  }
  auto acyc = is_acyclic(w.digraph);
  r.acyclic = acyc.acyclic;
  r.directed_cycle = acyc.cycle;

  Graph cg = competition_graph(w.digraph);
  std::set<Vertex> base_set(w.base.begin(), w.base.end());
  std::vector<Edge> produced;
  for (const auto& e : cg.edges()) {
    const bool a_added = !base_set.contains(e.first), b_added = !base_set.contains(e.second);
    if (a_added) r.non_isolated_added.push_back(e.first);
    if (b_added) r.non_isolated_added.push_back(e.second);
    if (!a_added && !b_added) produced.push_back(e);
  }
  std::sort(r.non_isolated_added.begin(), r.non_isolated_added.end());
  r.non_isolated_added.erase(std::unique(r.non_isolated_added.begin(), r.non_isolated_added.end()),
                             r.non_isolated_added.end());
  r.added_isolated = r.non_isolated_added.empty();

  auto expected = g.edges();
  std::set_difference(expected.begin(), expected.end(), produced.begin(), produced.end(),
                      std::back_inserter(r.missing_edges));
  std::set_difference(produced.begin(), produced.end(), expected.begin(), expected.end(),
                      std::back_inserter(r.extra_edges));
  r.competition_graph_matches = r.missing_edges.empty() && r.extra_edges.empty();

  if (common_prey) {
    for (const auto& m : common_prey->clique.members) {
      if (!w.digraph.has_arc(m, common_prey->prey)) r.missing_common_arcs.push_back(m);
    }
    r.common_out_neighbor = r.missing_common_arcs.empty();
  }
  return r;
}

namespace io {

inline Json to_json(const TraceStep& s) {
  Json out;
  out["step"] = s.step;
  out["instance"] = vertex_array(s.instance);
  out["consumed"] = vertex_array(s.consumed);
  out["produced"] = vertex_array(s.produced);
  return out;
}

inline Json to_json(const Witness& w) {
  Json trace = Json::array();
  for (const auto& s : w.trace) trace.push_back(to_json(s));
  Json out;
  out["digraph"] = to_json(w.digraph);
  out["base"] = vertex_array(w.base);
  out["added"] = vertex_array(w.added);
  out["trace"] = std::move(trace);
  return out;
}

inline Witness witness_from_json(const Json& j) {
  Witness w;
  w.digraph = digraph_from_json(require(j, "digraph"));
  w.base = vertices_from_json(require(j, "base"), "base");
  w.added = vertices_from_json(require(j, "added"), "added");
  if (j.contains("trace")) {
    const Json& trace = j.at("trace");
    if (!trace.is_array()) throw ParseError("trace must be an array");
    for (const auto& item : trace) {
      TraceStep s;
      const Json& step = require(item, "step");
      if (!step.is_string()) throw ParseError("trace step name must be a string");
      s.step = step.get<std::string>();
      s.instance = vertices_from_json(require(item, "instance"), "instance");
      s.consumed = vertices_from_json(require(item, "consumed"), "consumed");
      s.produced = vertices_from_json(require(item, "produced"), "produced");
      w.trace.push_back(std::move(s));
    }
  }
  return w;
}

inline std::string serialize(const Witness& w) { return to_json(w).dump() + "\n"; }
inline Witness parse_witness(std::string_view text) { return witness_from_json(parse_json_text(text)); }

inline Json edge_array(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [a, b] : edges) out.push_back(Json::array({to_json(a), to_json(b)}));
  return out;
}

inline Json to_json(const VerificationReport& r) {
  Json out;
  out["passed"] = r.passed();
  out["vertex_sets_consistent"] = r.vertex_sets_consistent;
  out["acyclic"] = r.acyclic;
  out["directed_cycle"] = vertex_array(r.directed_cycle);
  out["competition_graph_matches"] = r.competition_graph_matches;
  out["missing_edges"] = edge_array(r.missing_edges);
  out["extra_edges"] = edge_array(r.extra_edges);
  out["added_isolated"] = r.added_isolated;
  out["non_isolated_added"] = vertex_array(r.non_isolated_added);
  out["common_out_neighbor"] = r.common_out_neighbor ? Json(*r.common_out_neighbor) : Json(nullptr);
  out["missing_common_arcs"] = vertex_array(r.missing_common_arcs);
  return out;
}

}  // namespace io
}  // namespace compnum
