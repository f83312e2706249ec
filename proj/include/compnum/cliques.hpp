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
#include <vector>

#include "compnum/algorithms.hpp"
#include "compnum/errors.hpp"
#include "compnum/holes.hpp"

namespace compnum {

/// Vertex set that is complete in its host graph; members sorted.
struct Clique {
  std::vector<Vertex> members;

  static Clique of(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Clique{std::move(members)};
  }

  std::size_t size() const noexcept { return members.size(); }
  bool non_edge() const noexcept { return members.size() >= 3; }

  bool contains(const Vertex& v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) out.emplace_back(members[i], members[j]);
    }
    return out;
  }

  bool has_edge(const Edge& e) const { return e.first != e.second && contains(e.first) && contains(e.second); }

  Clique without(const Vertex& v) const {
    Clique out;
    for (const auto& m : members) {
      if (m != v) out.members.push_back(m);
    }
    return out;
  }

  bool is_clique_in(const Graph& g) const {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!g.contains(members[i])) return false;
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!g.has_edge(members[i], members[j])) return false;
      }
    }
    return true;
  }

  friend auto operator<=>(const Clique&, const Clique&) = default;
  friend bool operator==(const Clique&, const Clique&) = default;
};

namespace detail {

class MaximalCliqueSearch {
 public:
  MaximalCliqueSearch(const Graph& g, std::uint64_t max_nodes) : g_(g), max_nodes_(max_nodes) {}

  std::vector<std::vector<int>> run() {
    std::vector<int> all(g_.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> r;
    expand(r, all, {});
    return std::move(found_);
  }

 private:
  std::vector<int> restrict_to_neighbors(const std::vector<int>& set, int v) const {
    std::vector<int> out;
    for (int x : set) {
      if (g_.adjacent(v, x)) out.push_back(x);
    }
    return out;
  }

  // Bron-Kerbosch with Tomita pivoting.
  void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded("maximal clique enumeration", max_nodes_);
    if (p.empty()) {
      if (x.empty() && !r.empty()) found_.push_back(r);
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (int u : *set) {
        std::size_t c = 0;
        for (int w : p) c += g_.adjacent(u, w);
        if (pivot < 0 || c > best) {
          pivot = u;
          best = c;
        }
      }
    }
    std::vector<int> candidates;
    for (int v : p) {
      if (!g_.adjacent(pivot, v)) candidates.push_back(v);
    }
    for (int v : candidates) {
      r.push_back(v);
      expand(r, restrict_to_neighbors(p, v), restrict_to_neighbors(x, v));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> found_;
};

}  // namespace detail

/// All maximal cliques, members sorted, list sorted. Isolated vertices are
/// singleton cliques; the empty graph has none.
inline std::vector<Clique> enumerate_maximal_cliques(const Graph& g,
                                                     std::uint64_t max_nodes = kDefaultSearchBudget) {
  std::vector<Clique> out;
  for (auto& idx : detail::MaximalCliqueSearch(g, max_nodes).run()) {
    std::vector<Vertex> members;
    for (int i : idx) members.push_back(g.vertex(i));
    out.push_back(Clique::of(std::move(members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t clique_number(const std::vector<Clique>& maximal) {
  std::size_t omega = 0;
  for (const auto& c : maximal) omega = std::max(omega, c.size());
  return omega;
}

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering (first eliminated first) when chordal.
  std::vector<Vertex> elimination_order;
  /// A witnessing hole when not chordal.
  std::optional<Hole> hole;
};

/// Reverse of a maximum cardinality search visit, ties to the smallest index.
/// It is a perfect elimination ordering iff g is chordal.
inline std::vector<int> mcs_elimination_order(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    numbered[best] = 1;
    visit.push_back(best);
    for (int w : g.neighbors(best)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

inline bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (int v : order) {
    int first_later = -1;
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (first_later < 0 || pos[w] < pos[first_later])) first_later = w;
    }
    if (first_later < 0) continue;
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v] && w != first_later && !g.adjacent(first_later, w)) return false;
    }
  }
  return true;
}

inline ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult out;
  auto order = mcs_elimination_order(g);
  if (is_perfect_elimination_order(g, order)) {
    out.chordal = true;
    for (int i : order) out.elimination_order.push_back(g.vertex(i));
    return out;
  }
  out.hole = find_hole(g);
  return out;
}

}  // namespace compnum
