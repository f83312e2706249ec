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
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "compnum/competition.hpp"

namespace compnum {

struct OracleOptions {
  /// Largest k tried; defaults to the trivial upper bound.
  std::optional<std::size_t> max_k;
  std::uint64_t budget = 50'000'000;
  std::size_t vertex_cap = 10;
  /// Upper bound already certified elsewhere (for example by a construction).
  std::optional<std::size_t> known_upper;
};

/// Either an exact competition number (lower == upper, exact set) or the
/// bracket proven before the budget ran out. `lower` is always sound: every
/// k below it was refuted by exhaustive search.
struct OracleResult {
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  /// Witness for `upper` when the oracle produced one itself.
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
};

/// Edge clique cover with an injective prey per clique; arcs run from
/// clique members to their prey and must form an acyclic digraph.
struct CliqueCoverAssignment {
  std::vector<Clique> cliques;
  std::vector<Vertex> prey;
};

namespace detail {

class CompetitionSearch {
 public:
  CompetitionSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    n_ = static_cast<int>(g.order());
    for (auto [a, b] : g.index_edges()) edges_.push_back({a, b});
    m_ = static_cast<int>(edges_.size());
    full_ = m_ == 64 ? ~0ULL : ((1ULL << m_) - 1);
    collect_cliques();
    compat_.assign(static_cast<std::size_t>(m_), 0);
    for (int e = 0; e < m_; ++e) {
      for (int f = 0; f < m_; ++f) {
        std::uint64_t members = bit(edges_[e].first) | bit(edges_[e].second) | bit(edges_[f].first) |
                                bit(edges_[f].second);
        if (is_clique_mask(members)) compat_[e] |= 1ULL << f;
      }
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  /// Lower bound on the clique count for the uncovered edges: a greedy set of
  /// edges no two of which fit in one clique.
  int cover_lower_bound(std::uint64_t covered) const {
    std::uint64_t picked = 0;
    int count = 0;
    for (std::uint64_t rest = full_ & ~covered; rest; rest &= rest - 1) {
      int e = std::countr_zero(rest);
      if ((compat_[e] & picked) == 0) {
        picked |= 1ULL << e;
        ++count;
      }
    }
    return count;
  }

  std::size_t first_useful_k() const {
    int lb = cover_lower_bound(0);
    return static_cast<std::size_t>(std::max(0, lb - std::max(0, n_ - 2)));
  }

  /// Searches for an assignment using at most k added prey.
  bool feasible(std::size_t k) {
    k_ = static_cast<int>(k);
    total_ = n_ + k_;
    if (total_ > 64) throw PreconditionError("oracle supports at most 64 vertices including added ones");
    reach_.fill(0);
    used_base_ = 0;
    used_added_ = 0;
    stack_.clear();
    return recurse(0);
  }

  /// Valid after a successful feasible(k): (clique mask, prey index), prey >= n means added.
  const std::vector<std::pair<std::uint64_t, int>>& solution() const { return solution_; }

  std::vector<std::uint64_t> maximal_clique_masks() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c : cliques_) {
      bool maximal = true;
      for (int v = 0; v < n_ && maximal; ++v) {
        if (!(c & bit(v)) && is_clique_mask(c | bit(v))) maximal = false;
      }
      if (maximal) out.push_back(c);
    }
    return out;
  }

 private:
  static std::uint64_t bit(int v) { return 1ULL << v; }

  bool is_clique_mask(std::uint64_t mask) const {
    for (std::uint64_t a = mask; a; a &= a - 1) {
      int u = std::countr_zero(a);
      for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
        if (!g_.adjacent(u, std::countr_zero(b))) return false;
      }
    }
    return true;
  }

  // Every clique with at least two vertices, as member masks, plus the edges it covers.
  void collect_cliques() {
    std::function<void(int, std::uint64_t)> grow = [&](int start, std::uint64_t mask) {
      if (std::popcount(mask) >= 2) cliques_.push_back(mask);
      for (int v = start; v < n_; ++v) {
        bool ok = true;
        for (std::uint64_t a = mask; a && ok; a &= a - 1) ok = g_.adjacent(v, std::countr_zero(a));
        if (ok) grow(v + 1, mask | bit(v));
      }
    };
    grow(0, 0);
    clique_edges_.resize(cliques_.size());
    by_edge_.assign(static_cast<std::size_t>(m_), {});
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      for (int e = 0; e < m_; ++e) {
        if ((cliques_[c] & bit(edges_[e].first)) && (cliques_[c] & bit(edges_[e].second))) {
          clique_edges_[c] |= 1ULL << e;
          by_edge_[e].push_back(static_cast<int>(c));
        }
      }
    }
    for (auto& list : by_edge_) {
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
        return std::popcount(cliques_[a]) > std::popcount(cliques_[b]);
      });
    }
  }

  void add_arcs(std::uint64_t members, int prey) {
    const std::uint64_t gained = (1ULL << prey) | reach_[prey];
    for (int x = 0; x < total_; ++x) {
      if ((members >> x & 1) || (reach_[x] & members)) reach_[x] |= gained;
    }
  }

  bool recurse(std::uint64_t covered) {
    if (covered == full_) {
      solution_ = stack_;
      return true;
    }
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int used_base_count = std::popcount(used_base_);
    // The first two base vertices in a topological order cannot be the prey of a clique.
    const int base_left = std::max(0, n_ - 2 - used_base_count);
    if (cover_lower_bound(covered) > base_left + (k_ - used_added_)) return false;

    const int e = std::countr_zero(full_ & ~covered);
    for (int c : by_edge_[e]) {
      const std::uint64_t members = cliques_[c];
      const std::uint64_t next_cover = covered | clique_edges_[c];
      if (base_left > 0) {
        for (int p = 0; p < n_; ++p) {
          if ((used_base_ | members) & bit(p)) continue;
          if (reach_[p] & members) continue;
          auto saved = reach_;
          add_arcs(members, p);
          used_base_ |= bit(p);
          stack_.emplace_back(members, p);
          const bool found = recurse(next_cover);
          stack_.pop_back();
          used_base_ &= ~bit(p);
          reach_ = saved;
          if (found) return true;
          if (exhausted_) return false;
        }
      }
      if (used_added_ < k_) {
        const int p = n_ + used_added_;
        auto saved = reach_;
        add_arcs(members, p);
        ++used_added_;
        stack_.emplace_back(members, p);
        const bool found = recurse(next_cover);
        stack_.pop_back();
        --used_added_;
        reach_ = saved;
        if (found) return true;
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  int n_ = 0;
  int m_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> cliques_;
  std::vector<std::uint64_t> clique_edges_;
  std::vector<std::vector<int>> by_edge_;
  std::vector<std::uint64_t> compat_;

  int k_ = 0;
  int total_ = 0;
  std::array<std::uint64_t, 64> reach_{};
  std::uint64_t used_base_ = 0;
  int used_added_ = 0;
  std::vector<std::pair<std::uint64_t, int>> stack_;
  std::vector<std::pair<std::uint64_t, int>> solution_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

inline std::vector<Vertex> mask_members(const Graph& g, std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(g.vertex(std::countr_zero(mask)));
  return out;
}

}  // namespace detail

/// Builds the witness digraph of an assignment: arcs from every clique member
/// to the clique's prey; `added` lists the new isolated vertices.
inline Witness witness_from_assignment(const Graph& g, const CliqueCoverAssignment& a,
                                       const std::vector<Vertex>& added, std::string step) {
  Witness w;
  w.base.assign(g.vertices().begin(), g.vertices().end());
  w.added = added;
  std::vector<Vertex> all = w.base;
  all.insert(all.end(), added.begin(), added.end());
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < a.cliques.size(); ++i) {
    for (const auto& m : a.cliques[i].members) arcs.emplace_back(m, a.prey[i]);
  }
  w.digraph = Digraph::build(std::move(all), arcs);
  w.trace.push_back({std::move(step), w.base, {}, added});
  return w;
}

/// Exact competition number by iterative deepening over k. Throws
/// PreconditionError above the vertex cap.
inline OracleResult exact_competition_number(const Graph& g, const OracleOptions& options = {}) {
  if (g.order() > options.vertex_cap) {
    throw PreconditionError("oracle vertex cap exceeded: " + std::to_string(g.order()) + " > " +
                            std::to_string(options.vertex_cap));
  }
  if (g.order() > 64 || g.size() > 64) throw PreconditionError("oracle supports at most 64 vertices and edges");
  detail::CompetitionSearch search(g, options.budget);

  // Trivial witness: one fresh prey per maximal clique.
  auto maximal = search.maximal_clique_masks();
  FreshNames names(g.vertices());
  auto make_witness = [&](const std::vector<std::pair<std::uint64_t, int>>& sol, std::size_t k) {
    std::vector<Vertex> added;
    for (std::size_t i = 0; i < k; ++i) added.push_back(names.next());
    CliqueCoverAssignment a;
    for (auto [mask, prey] : sol) {
      a.cliques.push_back(Clique::of(detail::mask_members(g, mask)));
      a.prey.push_back(prey < search.vertex_count() ? g.vertex(prey)
                                                    : added[static_cast<std::size_t>(prey - search.vertex_count())]);
    }
    return witness_from_assignment(g, a, added, "oracle");
  };
  std::vector<std::pair<std::uint64_t, int>> trivial;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    trivial.emplace_back(maximal[i], search.vertex_count() + static_cast<int>(i));
  }
  const std::size_t trivial_k = maximal.size();

  OracleResult out;
  out.lower = search.first_useful_k();
  std::size_t upper = trivial_k;
  if (options.known_upper) upper = std::min(upper, *options.known_upper);
  const std::size_t last = std::min(upper, options.max_k.value_or(upper));
  for (std::size_t k = search.first_useful_k(); k <= last; ++k) {
    if (search.feasible(k)) {
      out.exact = true;
      out.lower = out.upper = k;
      out.witness = make_witness(search.solution(), k);
      out.nodes = search.nodes();
      return out;
    }
    if (search.exhausted()) {
      out.lower = k;
      break;
    }
    out.lower = k + 1;
  }
  out.nodes = search.nodes();
  out.upper = upper;
  if (out.lower > out.upper) {
    throw std::logic_error("exhaustive search refuted the supplied upper bound " + std::to_string(upper));
  }
  // Every k below a certified upper bound refuted: the bound is exact.
  if (out.lower == out.upper) out.exact = true;
  if (upper == trivial_k) out.witness = make_witness(trivial, trivial_k);
  return out;
}

}  // namespace compnum
