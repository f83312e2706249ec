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
#include <functional>
#include <limits>
#include <vector>

#include "compnum/algorithms.hpp"
#include "compnum/errors.hpp"

namespace compnum {

struct HoleSearchOptions {
  std::uint64_t max_nodes = kDefaultSearchBudget;
  std::size_t max_holes = std::numeric_limits<std::size_t>::max();
};

namespace detail {

// Grows induced paths s = p0, p1, ... with every vertex larger than the anchor
// s. A path closes into a hole when its last vertex is adjacent to s and the
// path has at least four vertices; p1 < last keeps one orientation.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, const HoleSearchOptions& options,
             std::function<bool(const std::vector<int>&)> emit)
      : g_(g), options_(options), emit_(std::move(emit)), on_path_(g.order(), 0) {}

  void run() {
    const int n = static_cast<int>(g_.order());
    for (int s = 0; s < n && !stopped_; ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      for (int a : g_.neighbors(s)) {
        if (a <= s) continue;
        push(a);
        extend();
        pop();
        if (stopped_) break;
      }
      on_path_[s] = 0;
    }
  }

 private:
  void push(int v) {
    path_.push_back(v);
    on_path_[v] = 1;
  }
  void pop() {
    on_path_[path_.back()] = 0;
    path_.pop_back();
  }

  void extend() {
    if (++nodes_ > options_.max_nodes) {
      throw BudgetExceeded("hole enumeration", options_.max_nodes);
    }
    const int s = path_.front();
    const int last = path_.back();
    for (int w : g_.neighbors(last)) {
      if (w <= s || on_path_[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (g_.adjacent(w, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (g_.adjacent(w, s)) {
        if (path_.size() >= 3 && path_[1] < w) {
          push(w);
          bool keep_going = emit_(path_);
          pop();
          if (!keep_going) {
            stopped_ = true;
            return;
          }
        }
        continue;
      }
      push(w);
      extend();
      pop();
      if (stopped_) return;
    }
  }

  const Graph& g_;
  HoleSearchOptions options_;
  std::function<bool(const std::vector<int>&)> emit_;
  std::vector<char> on_path_;
  std::vector<int> path_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

inline Hole hole_from_indices(const Graph& g, const std::vector<int>& seq) {
  std::vector<Vertex> vs;
  vs.reserve(seq.size());
  for (int i : seq) vs.push_back(g.vertex(i));
  return Cycle::from_sequence(std::move(vs));
}

}  // namespace detail

/// All chordless cycles of length >= 4, canonical and sorted.
/// Throws BudgetExceeded when the search passes options.max_nodes or more
/// than options.max_holes holes exist.
inline std::vector<Hole> enumerate_holes(const Graph& g, const HoleSearchOptions& options = {}) {
  std::vector<Hole> holes;
  detail::HoleSearch search(g, options, [&](const std::vector<int>& seq) {
    if (holes.size() >= options.max_holes) {
      throw BudgetExceeded("hole enumeration: hole count cap", options.max_holes);
    }
    holes.push_back(detail::hole_from_indices(g, seq));
    return true;
  });
  search.run();
  std::sort(holes.begin(), holes.end());
  return holes;
}

/// First hole met by the search, if any.
inline std::optional<Hole> find_hole(const Graph& g, const HoleSearchOptions& options = {}) {
  std::optional<Hole> found;
  detail::HoleSearch search(g, options, [&](const std::vector<int>& seq) {
    found = detail::hole_from_indices(g, seq);
    return false;
  });
  search.run();
  return found;
}

inline bool is_chordless(const Graph& g, const Cycle& c) { return c.chords(g).empty(); }

}  // namespace compnum
