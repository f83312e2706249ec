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
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compnum/competition.hpp"
#include "compnum/hypotheses.hpp"
#include "compnum/lemmas.hpp"
#include "compnum/oracle.hpp"

namespace compnum {

/// A step the constructions rely on did not hold on this instance.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, Graph instance)
      : std::runtime_error(what + "; instance: " + io::to_json(instance).dump()),
        reason_(what),
        instance_(std::move(instance)) {}

  const std::string& reason() const noexcept { return reason_; }
  const Graph& instance() const noexcept { return instance_; }

 private:
  std::string reason_;
  Graph instance_;
};

/// Triangle-free hypothesis instance whose edge count is not |V| + h - 1.
class HypothesisAnomaly : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

/// No builder covers the graph's class.
class UnsupportedClass : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

enum class EliminationStrategy { max_cardinality_search, lex_bfs };

struct BuilderOptions {
  /// Verify every intermediate witness against its intermediate graph.
  bool verify_each_step = true;
  EliminationStrategy elimination = EliminationStrategy::max_cardinality_search;
  /// Seed for the randomized vertex orders tried by the triangle-free builder.
  std::uint64_t seed = 0;
  int random_restarts = 64;
  /// auto_witness falls back to the exact oracle for small unsupported graphs.
  bool oracle_fallback = false;
  OracleOptions oracle;
};

namespace detail {

inline std::vector<int> lex_bfs_elimination_order(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!numbered[v] && (best < 0 || label[v] > label[best])) best = v;
    }
    numbered[best] = 1;
    visit.push_back(best);
    for (int w : g.neighbors(best)) {
      if (!numbered[w]) label[w].push_back(n - step);
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

// Mutable arc list used while assembling a witness digraph.
struct DigraphDraft {
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;

  static DigraphDraft of(const Digraph& d) {
    return {{d.vertices().begin(), d.vertices().end()}, d.arcs()};
  }

  Digraph build() const { return Digraph::build(vertices, arcs); }
};

inline std::vector<Vertex> sorted_union(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline std::vector<Vertex> least_non_clique_edge_endpoints(const Hole& h, const std::optional<Clique>& K) {
  for (const auto& e : h.edges()) {
    if (!K || !K->has_edge(e)) return {e.first, e.second};
  }
  return {};
}

}  // namespace detail

/// Lemma-4 style pasting on bare digraphs: the in-arcs of consumed[j]
/// (isolated in C(d1)) are redirected to sources[j] (no in-arcs in d2) and
/// the consumed vertices are deleted. Throws PreconditionError.
inline Digraph paste_digraphs(const Digraph& d1, const Digraph& d2, const std::vector<Vertex>& consumed,
                              const std::vector<Vertex>& sources) {
  if (consumed.size() != sources.size()) throw PreconditionError("consumed and sources differ in length");
  for (const auto& v : d1.vertices()) {
    if (d2.contains(v)) throw PreconditionError("digraphs share vertex " + v.str());
  }
  if (std::set<Vertex>(consumed.begin(), consumed.end()).size() != consumed.size() ||
      std::set<Vertex>(sources.begin(), sources.end()).size() != sources.size()) {
    throw PreconditionError("consumed and sources must be distinct");
  }
  Graph c1 = competition_graph(d1);
  std::map<Vertex, Vertex> redirect;
  for (std::size_t j = 0; j < consumed.size(); ++j) {
    auto ci = c1.find(consumed[j]);
    if (!ci) throw PreconditionError("consumed vertex " + consumed[j].str() + " is not in the first digraph");
    if (c1.degree(*ci) != 0) {
      throw PreconditionError("consumed vertex " + consumed[j].str() + " is not isolated in the competition graph");
    }
    auto si = d2.find(sources[j]);
    if (!si) throw PreconditionError("source " + sources[j].str() + " is not in the second digraph");
    if (!d2.in_neighbors(*si).empty()) {
      throw PreconditionError("source " + sources[j].str() + " has in-neighbors");
    }
    redirect.emplace(consumed[j], sources[j]);
  }
  detail::DigraphDraft draft;
  for (const auto& v : d1.vertices()) {
    if (!redirect.contains(v)) draft.vertices.push_back(v);
  }
  draft.vertices.insert(draft.vertices.end(), d2.vertices().begin(), d2.vertices().end());
  for (const auto& [a, b] : d1.arcs()) {
    if (redirect.contains(a)) continue;
    auto it = redirect.find(b);
    draft.arcs.emplace_back(a, it == redirect.end() ? b : it->second);
  }
  auto d2_arcs = d2.arcs();
  draft.arcs.insert(draft.arcs.end(), d2_arcs.begin(), d2_arcs.end());
  return draft.build();
}

namespace detail {

class WitnessBuilder {
 public:
  WitnessBuilder(const Graph& root, BuilderOptions options)
      : names_(root.vertices()), options_(std::move(options)) {}

  Witness edgeless(const Graph& g) {
    Witness w;
    w.digraph = Digraph::build({g.vertices().begin(), g.vertices().end()}, std::span<const Arc>{});
    w.base.assign(g.vertices().begin(), g.vertices().end());
    w.trace.push_back({"edgeless", w.base, {}, {}});
    return w;
  }

  // Perfect elimination order v1..vn; clique {vi} + later neighbors preys on
  // v(i-1), the first one on the single added vertex. Singletons are skipped,
  // so the last two vertices of the order never receive arcs.
  Witness chordal(const Graph& g) {
    if (g.size() == 0) return edgeless(g);
    auto order = options_.elimination == EliminationStrategy::lex_bfs ? lex_bfs_elimination_order(g)
                                                                       : mcs_elimination_order(g);
    if (!is_perfect_elimination_order(g, order)) throw PreconditionError("graph is not chordal");
    std::vector<int> pos(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    const Vertex extra = names_.next();
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int v = order[i];
      std::vector<int> members{v};
      for (int w : g.neighbors(v)) {
        if (pos[w] > pos[v]) members.push_back(w);
      }
      if (members.size() < 2) continue;
      const Vertex prey = i == 0 ? extra : g.vertex(order[i - 1]);
      for (int m : members) arcs.emplace_back(g.vertex(m), prey);
    }
    Witness w;
    w.base.assign(g.vertices().begin(), g.vertices().end());
    w.added = {extra};
    auto all = w.base;
    all.push_back(extra);
    w.digraph = Digraph::build(std::move(all), arcs);
    w.trace.push_back({"chordal", w.base, {}, w.added});
    check(g, w, std::nullopt, "chordal");
    return w;
  }

  Witness triangle_free(const Graph& g) {
    if (g.order() < 2 || !is_connected(g) || !is_triangle_free(g)) {
      throw PreconditionError("needs a connected triangle-free graph on at least two vertices");
    }
    const std::size_t k = g.size() + 2 - g.order();
    for (const auto& order : candidate_orders(g)) {
      auto prey = match_edges_to_prey(g, order);
      const std::size_t matched =
          static_cast<std::size_t>(std::count_if(prey.begin(), prey.end(), [](int p) { return p >= 0; }));
      if (matched + k < g.size()) continue;
      Witness w;
      w.base.assign(g.vertices().begin(), g.vertices().end());
      auto all = w.base;
      std::vector<Arc> arcs;
      auto edges = g.index_edges();
      for (std::size_t e = 0; e < edges.size(); ++e) {
        Vertex target = prey[e] >= 0 ? g.vertex(prey[e]) : names_.next();
        if (prey[e] < 0) {
          w.added.push_back(target);
          all.push_back(target);
        }
        arcs.emplace_back(g.vertex(edges[e].first), target);
        arcs.emplace_back(g.vertex(edges[e].second), target);
      }
      w.digraph = Digraph::build(std::move(all), arcs);
      w.trace.push_back({"roberts", w.base, {}, w.added});
      check(g, w, std::nullopt, "roberts");
      return w;
    }
    throw ConstructionError("no vertex order admits an injective prey assignment for " +
                                std::to_string(g.size() + 2 - g.order()) + " added vertices",
                            g);
  }

  Witness paste(const Witness& w1, const Witness& w2, const std::vector<Vertex>& consumed,
                const std::vector<Vertex>& sources) {
    Witness w;
    w.digraph = paste_digraphs(w1.digraph, w2.digraph, consumed, sources);
    std::set<Vertex> gone(consumed.begin(), consumed.end());
    for (const auto& v : w1.base) {
      if (!gone.contains(v)) w.base.push_back(v);
    }
    w.base = sorted_union(std::move(w.base), w2.base);
    for (const auto& v : w1.added) {
      if (!gone.contains(v)) w.added.push_back(v);
    }
    w.added.insert(w.added.end(), w2.added.begin(), w2.added.end());
    w.trace = w1.trace;
    w.trace.insert(w.trace.end(), w2.trace.begin(), w2.trace.end());
    w.trace.push_back({"paste", sources, consumed, {}});

    // Pasting must give C(D) = C(D1) + C(D2) - consumed exactly.
    auto acyc = is_acyclic(w.digraph);
    Graph c1 = competition_graph(w1.digraph), c2 = competition_graph(w2.digraph);
    std::vector<Edge> expected = c1.edges();
    auto e2 = c2.edges();
    expected.insert(expected.end(), e2.begin(), e2.end());
    std::sort(expected.begin(), expected.end());
    auto got = competition_graph(w.digraph).edges();
    if (!acyc.acyclic || got != expected) {
      throw std::logic_error("pasted digraph violates the pasting identity");
    }
    return w;
  }

  struct CliqueWitness {
    Witness witness;
    Vertex common_prey;
  };

  // Exactly two added vertices [i1, i2]; every vertex of K has an arc to i2.
  CliqueWitness theorem1(const Graph& g, const HypothesisReport& report, const Clique& K) {
    CliqueWitness out = K.size() == 2 ? theorem1_base(g, report, K) : theorem1_step(g, report, K);
    check(g, out.witness, CommonPreyCheck{K, out.common_prey}, "theorem1");
    return out;
  }

  Witness theorem2(const Graph& g, const HypothesisReport& report) {
    if (!report.bound_applies()) throw PreconditionError("requires the hypotheses and 2 <= omega <= h + 1");
    if (report.omega == report.h + 1) return theorem1(g, report, default_clique(report)).witness;
    if (report.omega == 2) {
      if (g.size() + 1 != g.order() + report.h) {
        throw HypothesisAnomaly("triangle-free instance with edge-disjoint holes has |E| = " +
                                    std::to_string(g.size()) + " but |V| + h - 1 = " +
                                    std::to_string(g.order() + report.h - 1),
                                g);
      }
      return triangle_free(g);
    }
    const auto ends = least_non_clique_edge_endpoints(report.holes.front(), report.K);
    expect(ends.size() == 2, "least hole has an edge outside K", g);
    const Edge e = make_edge(ends[0], ends[1]);
    Graph smaller = g.without_edge(e);
    auto sub = validate_hypotheses(smaller);
    expect(sub.h + 1 == report.h, "removing a non-clique hole edge removes exactly one hole", g);
    expect(sub.omega == report.omega && sub.K == report.K, "removing a non-clique hole edge keeps K", g);
    expect(sub.hypotheses_hold(), "removing a non-clique hole edge keeps the hypotheses", g);
    Witness w = theorem2(smaller, sub);
    const Vertex i = names_.next();
    w = with_sink(w, i, {e.first, e.second});
    w.trace.push_back({"theorem2.edge", {g.vertices().begin(), g.vertices().end()}, {}, {i}});
    check(g, w, std::nullopt, "theorem2");
    return w;
  }

  static Clique default_clique(const HypothesisReport& report) {
    if (report.K) return *report.K;
    auto ends = least_non_clique_edge_endpoints(report.holes.front(), std::nullopt);
    return Clique::of(ends);
  }

 private:
  static void expect(bool ok, const std::string& what, const Graph& g) {
    if (!ok) throw ConstructionError("assertion failed: " + what, g);
  }

  void check(const Graph& g, const Witness& w, const std::optional<CommonPreyCheck>& prey, const char* step) {
    if (!options_.verify_each_step) return;
    auto report = verify_witness(g, w, prey);
    if (!report.passed()) {
      throw ConstructionError(std::string("intermediate witness failed verification after ") + step + ": " +
                                  io::to_json(report).dump(),
                              g);
    }
  }

  static Witness with_sink(Witness w, const Vertex& sink, const std::vector<Vertex>& tails) {
    auto draft = DigraphDraft::of(w.digraph);
    draft.vertices.push_back(sink);
    for (const auto& t : tails) draft.arcs.emplace_back(t, sink);
    w.digraph = draft.build();
    w.added.push_back(sink);
    return w;
  }

  static Witness with_arcs(Witness w, const std::vector<Arc>& arcs) {
    auto draft = DigraphDraft::of(w.digraph);
    draft.arcs.insert(draft.arcs.end(), arcs.begin(), arcs.end());
    w.digraph = draft.build();
    return w;
  }

  // Tree witness with one added vertex and at least two in-sources, sources
  // listed base vertices first.
  std::pair<Witness, std::vector<Vertex>> tree_with_sources(const Graph& tree) {
    Witness w = chordal(tree);
    if (w.added.empty()) {
      const Vertex extra = names_.next();
      w = with_sink(w, extra, {});
      w.trace.back().produced = w.added;
    }
    std::set<Vertex> base(w.base.begin(), w.base.end());
    std::vector<Vertex> sources, added_sources;
    for (const auto& s : w.digraph.sources()) (base.contains(s) ? sources : added_sources).push_back(s);
    sources.insert(sources.end(), added_sources.begin(), added_sources.end());
    return {std::move(w), std::move(sources)};
  }

  CliqueWitness theorem1_base(const Graph& g, const HypothesisReport& report, const Clique& K) {
    expect(report.h == 1, "a two-vertex clique comes with exactly one hole", g);
    const Edge e = make_edge(K.members[0], K.members[1]);
    expect(g.has_edge(e.first, e.second), "designated clique is an edge", g);
    const Hole& hole = report.holes.front();
    Graph rest = g.without_edge(e);
    Witness w;
    std::string step;
    if (hole.has_edge(e)) {
      expect(is_tree(rest), "removing the hole edge leaves a tree", g);
      w = chordal(rest);
      step = "theorem1.base.hole_edge";
    } else if (g.degree(g.index(e.first)) == 1 || g.degree(g.index(e.second)) == 1) {
      const Vertex pendant = g.degree(g.index(e.first)) == 1 ? e.first : e.second;
      const Vertex removed[] = {pendant};
      Graph core = g.without_vertices(removed);
      expect(is_connected(core) && core.size() == core.order(), "removing a pendant vertex keeps a unicyclic graph",
             g);
      Witness wc = triangle_free(core);
      expect(wc.added.size() == 2, "unicyclic core needs two added vertices", g);
      // The pendant vertex takes over the role of one added vertex.
      std::map<Vertex, Vertex> rename{{wc.added[0], pendant}};
      DigraphDraft draft;
      for (const auto& v : wc.digraph.vertices()) draft.vertices.push_back(rename.contains(v) ? rename.at(v) : v);
      for (const auto& [a, b] : wc.digraph.arcs()) {
        draft.arcs.emplace_back(rename.contains(a) ? rename.at(a) : a, rename.contains(b) ? rename.at(b) : b);
      }
      w.digraph = draft.build();
      w.base = sorted_union(wc.base, {pendant});
      w.added = {wc.added[1]};
      w.trace = wc.trace;
      w.trace.push_back({"rename", {pendant}, {wc.added[0]}, {}});
      step = "theorem1.base.pendant_edge";
    } else {
      expect(is_cut_edge(g, e), "an edge off the hole that is not pendant is a cut edge", g);
      auto comps = connected_components(rest);
      expect(comps.size() == 2, "removing a cut edge leaves two components", g);
      Graph a = rest.induced(comps[0]), b = rest.induced(comps[1]);
      if (is_tree(a)) std::swap(a, b);
      expect(is_tree(b) && a.size() == a.order(), "one side is a tree and the other holds the hole", g);
      expect(a.order() >= 2 && b.order() >= 2, "both sides have at least two vertices", g);
      auto [wt, sources] = tree_with_sources(b);
      expect(sources.size() >= 2, "tree witness has two in-sources", g);
      Witness wh = triangle_free(a);
      expect(wh.added.size() == 2, "unicyclic side needs two added vertices", g);
      w = paste(wh, wt, wh.added, {sources[0], sources[1]});
      step = "theorem1.base.cut_edge";
    }
    check(rest, w, std::nullopt, step.c_str());
    expect(w.added.size() == 1, "the graph minus the clique edge has a one-vertex witness", g);
    const Vertex i2 = names_.next();
    w = with_sink(std::move(w), i2, {e.first, e.second});
    w.trace.push_back({step, {g.vertices().begin(), g.vertices().end()}, {}, {i2}});
    return {std::move(w), i2};
  }

  CliqueWitness theorem1_step(const Graph& g, const HypothesisReport& report, const Clique& K) {
    expect(report.K && *report.K == K, "designated clique is the unique non-edge maximal clique", g);
    const auto sel = select_clique_vertex(g, report);
    const Vertex& v1 = sel.vertex;
    const Clique rest_clique = K.without(v1);
    std::vector<Edge> spokes;
    for (const auto& u : rest_clique.members) spokes.push_back(make_edge(v1, u));

    auto sub_report = [&](const Graph& sub) {
      auto r = validate_hypotheses(sub);
      expect(r.hypotheses_hold(), "the reduced graph keeps the hypotheses", g);
      expect(r.h + 1 == report.h, "the reduced graph has exactly one hole fewer", g);
      expect(r.omega == rest_clique.size(), "the reduced graph has clique number |K| - 1", g);
      if (rest_clique.non_edge()) expect(r.K && *r.K == rest_clique, "K - v is the reduced clique", g);
      return r;
    };

    if (sel.condition == LemmaCondition::a) {
      const auto ends = least_non_clique_edge_endpoints(report.holes.front(), K);
      expect(ends.size() == 2, "least hole has an edge outside K", g);
      const Vertex &u = ends[0], &w = ends[1];
      auto removed = spokes;
      removed.push_back(make_edge(u, w));
      Graph split = g.without_edges(removed);
      auto comps = connected_components(split);
      expect(comps.size() == 2, "the split graph has exactly two components", g);
      auto tree_it = std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
        return std::find(c.begin(), c.end(), v1) != c.end();
      });
      const auto& tree_vertices = *tree_it;
      const auto& other_vertices = comps[tree_it == comps.begin() ? 1 : 0];
      Graph tree = split.induced(tree_vertices), other = split.induced(other_vertices);
      expect(is_tree(tree), "the selected vertex's side is a tree", g);
      expect(other.contains(u) && other.contains(w), "the removed hole edge lies on the other side", g);

      auto [rec, i2] = theorem1(other, sub_report(other), rest_clique);
      const Vertex i3 = rec.added.front();
      auto [wt, sources] = tree_with_sources(tree);
      expect(sources.size() >= 2, "tree witness has two in-sources", g);
      const Vertex i1 = wt.added.front();
      Witness pasted = paste(rec, wt, {i3}, {sources[0]});
      check(split, pasted, std::nullopt, "theorem1.a.paste");
      Witness out = with_arcs(std::move(pasted), {{v1, i2}, {u, sources[1]}, {w, sources[1]}});
      out.added = {i1, i2};
      out.trace.push_back({"theorem1.a", {g.vertices().begin(), g.vertices().end()}, {}, {}});
      return {std::move(out), i2};
    }

    Graph reduced = g.without_edges(spokes);
    expect(is_connected(reduced), "removing the spokes keeps the graph connected", g);
    auto [rec, i2] = theorem1(reduced, sub_report(reduced), rest_clique);
    Witness out = with_arcs(std::move(rec), {{v1, i2}});
    out.trace.push_back({"theorem1.b", {g.vertices().begin(), g.vertices().end()}, {}, {}});
    return {std::move(out), i2};
  }

  std::vector<std::vector<int>> candidate_orders(const Graph& g) const {
    const int n = static_cast<int>(g.order());
    std::vector<std::vector<int>> out;
    auto bfs = [&](int root, const std::vector<std::vector<int>>& nbrs) {
      std::vector<int> order{root};
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      seen[root] = 1;
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : nbrs[order[i]]) {
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
        }
      }
      return order;
    };
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nbrs[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    out.push_back(bfs(0, nbrs));

    std::vector<int> dfs;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      dfs.push_back(v);
      for (auto it = nbrs[v].rbegin(); it != nbrs[v].rend(); ++it) {
        if (!seen[*it]) stack.push_back(*it);
      }
    }
    out.push_back(dfs);

    // Smallest-last degeneracy order, reversed so that dense cores come first.
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<int> peel;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
      }
      removed[best] = 1;
      peel.push_back(best);
      for (int w : g.neighbors(best)) --degree[w];
    }
    std::reverse(peel.begin(), peel.end());
    out.push_back(peel);

    std::mt19937_64 rng(options_.seed);
    for (int r = 0; r < options_.random_restarts; ++r) {
      auto shuffled = nbrs;
      for (auto& list : shuffled) {
        for (std::size_t i = list.size(); i > 1; --i) std::swap(list[i - 1], list[rng() % i]);
      }
      out.push_back(bfs(static_cast<int>(rng() % static_cast<std::uint64_t>(n)), shuffled));
    }
    return out;
  }

  // Maximum matching of edges to prey vertices placed after both endpoints.
  static std::vector<int> match_edges_to_prey(const Graph& g, const std::vector<int>& order) {
    const std::size_t n = g.order();
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    auto edges = g.index_edges();
    std::vector<int> edge_prey(edges.size(), -1), prey_edge(n, -1);
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int e) {
      const int after = std::max(pos[edges[e].first], pos[edges[e].second]);
      for (std::size_t i = static_cast<std::size_t>(after) + 1; i < n; ++i) {
        const int p = order[i];
        if (visited[p]) continue;
        visited[p] = 1;
        if (prey_edge[p] < 0 || augment(prey_edge[p])) {
          prey_edge[p] = e;
          edge_prey[e] = p;
          return true;
        }
      }
      return false;
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
      visited.assign(n, 0);
      augment(static_cast<int>(e));
    }
    return edge_prey;
  }

  FreshNames names_;
  BuilderOptions options_;
};

}  // namespace detail

/// k = 1 witness for a chordal graph with an edge (k = 0 when edgeless).
/// With at least two vertices the digraph has at least two in-sources.
inline Witness chordal_witness(const Graph& g, const BuilderOptions& options = {}) {
  return detail::WitnessBuilder(g, options).chordal(g);
}

/// Witness with exactly |E| - |V| + 2 added vertices for a connected
/// triangle-free graph.
inline Witness triangle_free_witness(const Graph& g, const BuilderOptions& options = {}) {
  return detail::WitnessBuilder(g, options).triangle_free(g);
}

/// Pastes two witnesses with disjoint vertex sets. The result's added list is
/// w1's survivors followed by w2's; consumed base vertices leave the base.
inline Witness paste(const Witness& w1, const Witness& w2, const std::vector<Vertex>& consumed,
                     const std::vector<Vertex>& sources) {
  return detail::WitnessBuilder(Graph{}, {}).paste(w1, w2, consumed, sources);
}

/// Two-vertex witness for a graph whose clique number is one more than its
/// hole count. The added list is [i1, i2] and every vertex of K has an arc
/// to i2. When omega = 2, K may be any edge; it defaults to the least edge
/// of the hole.
inline Witness theorem1_witness(const Graph& g, const HypothesisReport& report,
                                const std::optional<Clique>& designated = std::nullopt,
                                const BuilderOptions& options = {}) {
  if (!report.clique_matches_holes() || !is_connected(g)) {
    throw PreconditionError("requires a connected graph meeting the hypotheses with omega = h + 1 and h >= 1");
  }
  Clique K = detail::WitnessBuilder::default_clique(report);
  if (designated) {
    if (report.K ? *designated != *report.K : (designated->size() != 2 || !designated->is_clique_in(g))) {
      throw PreconditionError("designated clique must be K, or an edge when omega = 2");
    }
    K = *designated;
  }
  return detail::WitnessBuilder(g, options).theorem1(g, report, K).witness;
}

/// Witness with at most h - omega + 3 added vertices.
inline Witness theorem2_witness(const Graph& g, const HypothesisReport& report,
                                const BuilderOptions& options = {}) {
  if (!report.bound_applies()) {
    throw PreconditionError("requires a connected graph meeting the hypotheses with 2 <= omega <= h + 1");
  }
  return detail::WitnessBuilder(g, options).theorem2(g, report);
}

/// Routes to the cheapest builder that covers the graph.
inline Witness auto_witness(const Graph& g, const BuilderOptions& options = {}) {
  detail::WitnessBuilder builder(g, options);
  if (g.size() == 0) return builder.edgeless(g);
  if (is_chordal(g).chordal) return builder.chordal(g);
  if (is_connected(g) && is_triangle_free(g)) return builder.triangle_free(g);
  auto report = validate_hypotheses(g);
  if (report.bound_applies()) return builder.theorem2(g, report);
  if (options.oracle_fallback && g.order() <= options.oracle.vertex_cap) {
    auto result = exact_competition_number(g, options.oracle);
    if (result.exact && result.witness) return *result.witness;
  }
  throw UnsupportedClass("graph is outside the supported classes");
}

}  // namespace compnum
