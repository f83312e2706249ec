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

#include <optional>
#include <string>
#include <vector>

#include "compnum/cliques.hpp"
#include "compnum/holes.hpp"
#include "compnum/io.hpp"

namespace compnum {

enum class OmegaWindow {
  below,   // omega < 2
  within,  // 2 <= omega <= h + 1
  above,   // omega > h + 1
};

inline const char* to_string(OmegaWindow w) {
  switch (w) {
    case OmegaWindow::below: return "below";
    case OmegaWindow::within: return "within";
    case OmegaWindow::above: return "above";
  }
  return "?";
}

struct HypothesisFlags {
  bool holes_pairwise_edge_disjoint = false;
  bool at_most_one_non_edge_maximal_clique = false;
  bool connected = false;

  bool all() const noexcept {
    return holes_pairwise_edge_disjoint && at_most_one_non_edge_maximal_clique && connected;
  }
};

/// Structural summary of a graph against the hypotheses of the bound
/// theorems: holes pairwise edge-disjoint, at most one non-edge maximal
/// clique, connected, and 2 <= omega <= h + 1.
struct HypothesisReport {
  std::vector<Hole> holes;
  std::size_t h = 0;
  std::vector<Clique> maximal_cliques;
  std::size_t omega = 0;
  /// The unique non-edge maximal clique, present iff exactly one exists.
  std::optional<Clique> K;
  HypothesisFlags flags;
  OmegaWindow omega_window = OmegaWindow::below;

  bool hypotheses_hold() const noexcept { return flags.all(); }
  bool bound_applies() const noexcept { return flags.all() && omega_window == OmegaWindow::within; }
  bool clique_matches_holes() const noexcept { return flags.all() && h >= 1 && omega == h + 1; }
};

inline bool holes_pairwise_edge_disjoint(const std::vector<Hole>& holes) {
  std::vector<Edge> all;
  for (const auto& hole : holes) {
    auto es = hole.edges();
    all.insert(all.end(), es.begin(), es.end());
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

/// Propagates BudgetExceeded from the enumerations.
inline HypothesisReport validate_hypotheses(const Graph& g, const HoleSearchOptions& options = {}) {
  HypothesisReport r;
  r.holes = enumerate_holes(g, options);
  r.h = r.holes.size();
  r.maximal_cliques = enumerate_maximal_cliques(g, options.max_nodes);
  r.omega = clique_number(r.maximal_cliques);
  std::size_t non_edge = 0;
  for (const auto& c : r.maximal_cliques) {
    if (c.non_edge()) {
      ++non_edge;
      r.K = c;
    }
  }
  if (non_edge != 1) r.K.reset();
  r.flags.holes_pairwise_edge_disjoint = holes_pairwise_edge_disjoint(r.holes);
  r.flags.at_most_one_non_edge_maximal_clique = non_edge <= 1;
  r.flags.connected = is_connected(g);
  if (r.omega < 2) {
    r.omega_window = OmegaWindow::below;
  } else if (r.omega <= r.h + 1) {
    r.omega_window = OmegaWindow::within;
  } else {
    r.omega_window = OmegaWindow::above;
  }
  return r;
}

namespace io {

inline Json to_json(const HypothesisReport& r) {
  Json holes = Json::array();
  for (const auto& hole : r.holes) holes.push_back(vertex_array(hole.vertices()));
  Json cliques = Json::array();
  for (const auto& c : r.maximal_cliques) cliques.push_back(vertex_array(c.members));
  Json out;
  out["h"] = r.h;
  out["omega"] = r.omega;
  out["holes"] = std::move(holes);
  out["maximal_cliques"] = std::move(cliques);
  out["K"] = r.K ? vertex_array(r.K->members) : Json(nullptr);
  out["flags"] = {
      {"holes_pairwise_edge_disjoint", r.flags.holes_pairwise_edge_disjoint},
      {"at_most_one_non_edge_maximal_clique", r.flags.at_most_one_non_edge_maximal_clique},
      {"connected", r.flags.connected},
  };
  out["omega_window"] = to_string(r.omega_window);
  out["hypotheses_hold"] = r.bound_applies();
  return out;
}

}  // namespace io
}  // namespace compnum
