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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "compnum/compnum.hpp"
#include "oracles.hpp"

using namespace compnum;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s: %s(%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

std::vector<std::vector<std::size_t>> length_combos(std::size_t h) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t i = 0; i < h; ++i) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out) {
      for (std::size_t len = 4; len <= 6; ++len) {
        auto c = prefix;
        c.push_back(len);
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Hypothesis-passing corpus shared by the clique-criterion and selector sweeps.
std::vector<Graph> hypothesis_corpus() {
  std::vector<Graph> out;
  for (std::size_t h = 1; h <= 5; ++h) {
    for (std::size_t len = 4; len <= 6; ++len) out.push_back(gen_flower(h, std::vector<std::size_t>(h, len)));
  }
  for (std::size_t h = 1; h <= 5; ++h) {
    for (std::size_t omega = 2; omega <= h + 1; ++omega) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) out.push_back(gen_family({omega, h, {}, {}, seed}));
    }
  }
  return out;
}

void closed_form_oracle(Outcome& o) {
  std::size_t trees = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& t : oracle::nonisomorphic_trees(n)) {
      ++trees;
      auto r = exact_competition_number(t);
      if (!r.exact || r.lower != 1) o.fail("tree " + io::to_json(t).dump());
    }
  }
  auto single = exact_competition_number(oracle::nonisomorphic_trees(1).front());
  if (!single.exact || single.lower != 0) o.fail("single vertex");
  for (int n = 4; n <= 7; ++n) {
    auto r = exact_competition_number(oracle::cycle_graph(n));
    if (!r.exact || r.lower != 2) o.fail("C" + std::to_string(n));
  }
  std::size_t random = 0;
  for (std::uint64_t seed = 0; random < 20; ++seed) {
    const std::size_t n = 4 + seed % 5;
    Graph g;
    try {
      g = gen_triangle_free_random(n, 1 + seed % 3, seed);
    } catch (const GenerationError&) {
      continue;
    }
    ++random;
    auto r = exact_competition_number(g);
    if (!r.exact || r.lower != g.size() + 2 - g.order()) o.fail("triangle-free " + io::to_json(g).dump());
  }
  o.detail << trees << " trees on 2..7 vertices give k=1 (single vertex k=0), C4..C7 give k=2, " << random
           << " random triangle-free graphs match |E|-|V|+2 ";
}

void flower_witnesses(Outcome& o) {
  std::size_t built = 0, oracle_checked = 0;
  for (std::size_t h = 1; h <= 5; ++h) {
    for (const auto& lengths : length_combos(h)) {
      Graph g = gen_flower(h, lengths);
      auto r = validate_hypotheses(g);
      Witness w = theorem1_witness(g, r);
      ++built;
      const Clique K = r.K ? *r.K : detail::WitnessBuilder::default_clique(r);
      if (w.k() != 2) o.fail("k != 2 on " + io::to_json(g).dump());
      if (!verify_witness(g, w, CommonPreyCheck{K, w.added.back()}).passed()) {
        o.fail("verification on " + io::to_json(g).dump());
      }
      if (h <= 2 && g.order() <= 7) {
        ++oracle_checked;
        auto e = exact_competition_number(g);
        if (!e.exact || e.lower != 2) o.fail("oracle != 2 on " + io::to_json(g).dump());
      }
    }
  }
  o.detail << built << " flowers h=1..5 with lengths in {4,5,6} give 2 added vertices with common prey; "
           << oracle_checked << " with n<=7 have oracle k=2 ";
}

void bound_grid(Outcome& o) {
  std::size_t built = 0, oracle_checked = 0;
  for (std::size_t h = 1; h <= 5; ++h) {
    for (std::size_t omega = 2; omega <= h + 1; ++omega) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        Graph g = gen_family({omega, h, {}, {}, seed});
        auto r = validate_hypotheses(g);
        Witness w = theorem2_witness(g, r);
        ++built;
        if (w.k() > h - omega + 3) o.fail("bound exceeded on " + io::to_json(g).dump());
        if (!verify_witness(g, w).passed()) o.fail("verification on " + io::to_json(g).dump());
        if (g.order() <= 9) {
          ++oracle_checked;
          OracleOptions opts;
          opts.known_upper = w.k();
          auto e = exact_competition_number(g, opts);
          if (e.lower > w.k()) o.fail("oracle above witness on " + io::to_json(g).dump());
        }
      }
    }
  }
  Graph eight = oracle::figure_eight();
  auto e = exact_competition_number(eight);
  if (!e.exact || e.lower != 3) o.fail("figure-eight oracle " + std::to_string(e.lower));
  if (theorem2_witness(eight, validate_hypotheses(eight)).k() != 3) o.fail("figure-eight witness");
  o.detail << built << " instances over 20 (omega,h) cells stay within h-omega+3; " << oracle_checked
           << " with n<=9 have oracle <= witness; figure-eight oracle k=3 ";
}

void pasting_identity(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::size_t pairs = 0, redirected = 0;
  while (pairs < 100) {
    const std::size_t n1 = 3 + rng() % 6, n2 = 2 + rng() % 6;
    std::vector<Vertex> l1, l2;
    for (std::size_t i = 0; i < n1; ++i) l1.emplace_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < n2; ++i) l2.emplace_back("b" + std::to_string(i));
    std::shuffle(l1.begin(), l1.end(), rng);
    std::shuffle(l2.begin(), l2.end(), rng);
    Digraph d1 = oracle::random_dag(l1, 0.35, rng), d2 = oracle::random_dag(l2, 0.35, rng);
    Graph c1 = competition_graph(d1), c2 = competition_graph(d2);
    std::vector<Vertex> isolated, sources = d2.sources();
    for (const auto& v : c1.vertices()) {
      if (c1.degree(c1.index(v)) == 0) isolated.push_back(v);
    }
    std::shuffle(isolated.begin(), isolated.end(), rng);
    std::shuffle(sources.begin(), sources.end(), rng);
    const std::size_t p = std::min(isolated.size(), sources.size()) == 0
                              ? 0
                              : 1 + rng() % std::min(isolated.size(), sources.size());
    isolated.erase(isolated.begin() + static_cast<long>(p), isolated.end());
    sources.erase(sources.begin() + static_cast<long>(p), sources.end());
    ++pairs;
    redirected += p;
    Digraph d = paste_digraphs(d1, d2, isolated, sources);
    std::vector<Edge> expected;
    for (const auto& e : c1.edges()) {
      if (std::find(isolated.begin(), isolated.end(), e.first) == isolated.end() &&
          std::find(isolated.begin(), isolated.end(), e.second) == isolated.end()) {
        expected.push_back(e);
      }
    }
    for (const auto& e : c2.edges()) expected.push_back(e);
    std::sort(expected.begin(), expected.end());
    Graph c = competition_graph(d);
    if (c.edges() != expected) o.fail("identity broken for pair " + std::to_string(pairs));
    if (!is_acyclic(d).acyclic) o.fail("pasted digraph has a cycle at pair " + std::to_string(pairs));
    for (const auto& v : isolated) {
      if (d.contains(v)) o.fail("consumed vertex survived");
    }
  }
  o.detail << pairs << " random premise-satisfying pairs (" << redirected
           << " redirected vertices) satisfy C(D) = C(D1) + C(D2) - consumed ";
}

void chorded_cycles(Outcome& o) {
  std::mt19937_64 rng(77);
  std::size_t analyzed = 0, triangles = 0, hole_pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + trial % 7;
    Graph g = oracle::random_graph(n, 0.3, rng);
    for (const auto& c : oracle::all_cycles(g, n)) {
      if (c.length() < 4) continue;
      for (const auto& chord : c.chords(g)) {
        auto a = analyze_chorded_cycle(g, c, chord);
        ++analyzed;
        if (a.verdict == ChordedCycleAnalysis::Verdict::triangle) {
          ++triangles;
          const auto& t = *a.triangle;
          bool ok = t.size() == 3 && t.is_clique_in(g) && t.has_edge(chord);
          for (const auto& v : t.members) ok = ok && c.contains(v);
          if (!ok) o.fail("bad triangle on " + io::to_json(g).dump());
        } else {
          ++hole_pairs;
          const auto& [h1, h2] = *a.holes;
          bool ok = h1.length() >= 4 && h2.length() >= 4 && h1.lies_in(g) && h2.lies_in(g) &&
                    is_chordless(g, h1) && is_chordless(g, h2);
          for (const auto& v : h1.vertices()) ok = ok && c.contains(v);
          for (const auto& v : h2.vertices()) ok = ok && c.contains(v);
          std::vector<Edge> e1 = h1.edges(), e2 = h2.edges(), common;
          std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
          ok = ok && common == std::vector<Edge>{make_edge(chord.first, chord.second)};
          if (!ok) o.fail("bad hole pair on " + io::to_json(g).dump());
        }
      }
    }
  }
  o.detail << analyzed << " chorded cycles in 100 random graphs: " << triangles << " triangles, " << hole_pairs
           << " hole pairs sharing exactly the chord, all verified ";
}

void clique_criterion(const std::vector<Graph>& corpus, Outcome& o) {
  std::size_t instances = 0, cycles = 0;
  for (const auto& g : corpus) {
    auto r = validate_hypotheses(g);
    if (!r.hypotheses_hold() || !r.K) continue;
    ++instances;
    for (const auto& c : oracle::all_cycles(g, 8)) {
      ++cycles;
      const bool hole = c.length() >= 4 && is_chordless(g, c);
      if (is_hole_by_clique_criterion(r, c) != hole) {
        o.fail("disagreement on cycle of " + io::to_json(g).dump());
      }
    }
  }
  if (instances == 0) o.fail("no instances");
  o.detail << cycles << " cycles of length <= 8 over " << instances
           << " instances with a non-edge clique: zero disagreements ";
}

void hole_enumeration(Outcome& o) {
  std::mt19937_64 rng(99);
  std::size_t holes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    Graph g = oracle::random_graph(n, 0.2 + 0.05 * (trial % 8), rng);
    std::set<Hole> expected;
    for (const auto& c : oracle::all_cycles(g, n)) {
      if (c.length() >= 4 && is_chordless(g, c)) expected.insert(c);
    }
    auto got = enumerate_holes(g);
    holes += got.size();
    if (std::set<Hole>(got.begin(), got.end()) != expected || got.size() != expected.size()) {
      o.fail("mismatch on " + io::to_json(g).dump());
    }
  }
  o.detail << "200 random graphs with n <= 9 (" << holes << " holes) match exhaustive cycle enumeration ";
}

void selector_sweep(const std::vector<Graph>& corpus, Outcome& o) {
  std::size_t instances = 0, cond_a = 0, cond_b = 0, literal_over = 0;
  int restricted_max = 0, literal_max = 0;
  std::size_t restricted_low_vertex = 0, literal_low_vertex = 0;
  auto sweep = [&](const Graph& g) {
    auto r = validate_hypotheses(g);
    if (!r.clique_matches_holes() || !r.K) return;
    ++instances;
    try {
      auto sel = select_clique_vertex(g, r);
      (sel.condition == LemmaCondition::a ? cond_a : cond_b)++;
    } catch (const LemmaCondViolation& e) {
      o.fail(e.what());
    }
    auto rb = build_avoidance_graph(g, r, PathReading::restricted);
    auto lb = build_avoidance_graph(g, r, PathReading::literal);
    bool r_low = false, l_low = false, l_over = false;
    for (std::size_t j = 0; j < r.h; ++j) {
      restricted_max = std::max(restricted_max, rb.hole_degree(j));
      literal_max = std::max(literal_max, lb.hole_degree(j));
      if (rb.hole_degree(j) > 2) o.fail("restricted deg(H) > 2 on " + io::to_json(g).dump());
      l_over = l_over || lb.hole_degree(j) > 2;
    }
    for (std::size_t i = 0; i < rb.clique_side.size(); ++i) {
      r_low = r_low || rb.vertex_degree(i) <= 1;
      l_low = l_low || lb.vertex_degree(i) <= 1;
    }
    restricted_low_vertex += r_low;
    literal_low_vertex += l_low;
    literal_over += l_over;
  };
  for (const auto& g : corpus) sweep(g);
  for (std::size_t h = 2; h <= 5; ++h) {
    for (std::uint64_t seed = 100; seed < 110; ++seed) sweep(gen_family({h + 1, h, {}, {}, seed}));
  }
  if (instances < 50) o.fail("only " + std::to_string(instances) + " instances");
  o.detail << instances << " instances with omega=h+1: selector found (a) " << cond_a << " times, (b) " << cond_b
           << " times; max deg(H) restricted " << restricted_max << ", literal " << literal_max
           << " (literal deg(H)>2 on " << literal_over << "); some vertex with deg<=1: restricted "
           << restricted_low_vertex << "/" << instances << ", literal " << literal_low_vertex << "/" << instances
           << " ";
}

}  // namespace

int main() {
  const auto corpus = hypothesis_corpus();
  report(1, "closed-form oracle agreement", closed_form_oracle);
  report(2, "two-vertex witnesses for flowers", flower_witnesses);
  report(3, "h-omega+3 witnesses on the (omega,h) grid", bound_grid);
  report(4, "pasting identity", pasting_identity);
  report(5, "chorded cycle analysis", chorded_cycles);
  report(6, "hole test by clique intersection", [&](Outcome& o) { clique_criterion(corpus, o); });
  report(7, "hole enumeration vs exhaustive search", hole_enumeration);
  report(8, "clique vertex selection sweep", [&](Outcome& o) { selector_sweep(corpus, o); });
  return failures == 0 ? 0 : 1;
}
