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

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "compnum/compnum.hpp"

namespace compnum::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { pass = 0, io_error = 1, semantic_fail = 2 };

/// Raised for unreadable or unwritable files; maps to exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

inline std::string fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

inline Vertex parse_vertex_token(const std::string& token) {
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc() && end == token.data() + token.size()) return Vertex(value);
  return Vertex(token);
}

inline std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  for (std::string token; std::getline(in, token, ',');) {
    if (token.empty()) throw PreconditionError("empty vertex in list '" + text + "'");
    out.push_back(parse_vertex_token(token));
  }
  return out;
}

/// "1,2,3:$k1" -> clique {1,2,3}, prey $k1.
inline CommonPreyCheck parse_common_prey(const std::string& text) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos) throw PreconditionError("common-prey argument needs the form v1,v2,...:prey");
  return {Clique::of(parse_vertex_list(text.substr(0, colon))), parse_vertex_token(text.substr(colon + 1))};
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;

  void log(const std::string& command, const Json& config, std::string_view input) const {
    if (quiet) return;
    err << "compnum " << kVersion << " " << command << " config=" << config.dump();
    if (!input.empty()) err << " input_fnv1a=" << fnv1a(input);
    err << "\n";
  }

  void emit(const std::optional<std::string>& path, const std::string& text) const {
    if (path) {
      write_file(*path, text);
    } else {
      out << text;
    }
  }
};

inline std::string dump_instance(const Graph& g, const std::string& dir) {
  const std::string text = io::to_json(g).dump() + "\n";
  std::filesystem::path p = std::filesystem::path(dir) / ("compnum-instance-" + fnv1a(text) + ".json");
  write_file(p.string(), text);
  return p.string();
}

inline int analyze(const Context& ctx, const std::string& input, bool json, const std::optional<std::string>& output) {
  const std::string text = read_file(input);
  ctx.log("analyze", {{"input", input}, {"json", json}, {"output", output ? Json(*output) : Json(nullptr)}}, text);
  Graph g = io::parse_graph(text);
  auto report = validate_hypotheses(g);
  const std::string report_json = io::to_json(report).dump() + "\n";
  if (output) write_file(*output, report_json);
  if (json) {
    ctx.out << report_json;
  } else {
    ctx.out << "n=" << g.order() << " m=" << g.size() << " h=" << report.h << " omega=" << report.omega << "\n";
    for (const auto& hole : report.holes) {
      ctx.out << "hole";
      for (const auto& v : hole.vertices()) ctx.out << " " << v;
      ctx.out << "\n";
    }
    for (const auto& c : report.maximal_cliques) {
      ctx.out << "clique";
      for (const auto& v : c.members) ctx.out << " " << v;
      ctx.out << "\n";
    }
    ctx.out << "K=";
    if (report.K) {
      for (std::size_t i = 0; i < report.K->size(); ++i) ctx.out << (i ? "," : "") << report.K->members[i];
    } else {
      ctx.out << "none";
    }
    ctx.out << "\nholes_pairwise_edge_disjoint=" << report.flags.holes_pairwise_edge_disjoint
            << "\nat_most_one_non_edge_maximal_clique=" << report.flags.at_most_one_non_edge_maximal_clique
            << "\nconnected=" << report.flags.connected << "\nomega_window=" << to_string(report.omega_window)
            << "\nhypotheses " << (report.bound_applies() ? "pass" : "fail") << "\n";
  }
  return report.bound_applies() ? pass : semantic_fail;
}

struct ConstructArgs {
  std::string input;
  std::string method = "auto";
  std::optional<std::string> output;
  std::string format = "json";
  std::optional<std::string> clique;
  std::string dump_dir;
  std::uint64_t seed = 0;
  bool oracle_fallback = false;
};

inline int construct(const Context& ctx, const ConstructArgs& a) {
  const std::string text = read_file(a.input);
  ctx.log("construct",
          {{"input", a.input},
           {"method", a.method},
           {"output", a.output ? Json(*a.output) : Json(nullptr)},
           {"format", a.format},
           {"clique", a.clique ? Json(*a.clique) : Json(nullptr)},
           {"seed", a.seed},
           {"oracle_fallback", a.oracle_fallback}},
          text);
  Graph g = io::parse_graph(text);
  BuilderOptions options;
  options.seed = a.seed;
  options.oracle_fallback = a.oracle_fallback;
  std::optional<CommonPreyCheck> common;
  Witness w;
  try {
    if (a.method == "auto") {
      w = auto_witness(g, options);
    } else if (a.method == "chordal") {
      w = chordal_witness(g, options);
    } else if (a.method == "roberts") {
      w = triangle_free_witness(g, options);
    } else if (a.method == "theorem2") {
      w = theorem2_witness(g, validate_hypotheses(g), options);
    } else {
      auto report = validate_hypotheses(g);
      std::optional<Clique> designated;
      if (a.clique) designated = Clique::of(parse_vertex_list(*a.clique));
      w = theorem1_witness(g, report, designated, options);
      Clique K = designated ? *designated : detail::WitnessBuilder::default_clique(report);
      common = CommonPreyCheck{K, w.added.back()};
    }
  } catch (const ConstructionError& e) {
    ctx.err << "error: " << e.reason() << "\ninstance written to " << dump_instance(e.instance(), a.dump_dir) << "\n";
    return semantic_fail;
  } catch (const LemmaCondViolation& e) {
    ctx.err << "error: no clique vertex meets either selection condition\ninstance written to "
            << dump_instance(e.instance(), a.dump_dir) << "\n";
    return semantic_fail;
  } catch (const PreconditionError& e) {
    ctx.err << "error: " << e.what() << "\n";
    return semantic_fail;
  }
  auto report = verify_witness(g, w, common);
  if (!report.passed()) {
    ctx.err << "error: witness failed self-verification: " << io::to_json(report).dump() << "\ninstance written to "
            << dump_instance(g, a.dump_dir) << "\n";
    return semantic_fail;
  }
  const std::string body = a.format == "dot" ? io::to_dot(w.digraph) : io::serialize(w);
  if (a.output) {
    write_file(*a.output, body);
    ctx.out << "k=" << w.k() << "\n";
  } else {
    ctx.out << body;
    ctx.err << "k=" << w.k() << "\n";
  }
  return pass;
}

inline int verify(const Context& ctx, const std::string& graph_path, const std::string& witness_path,
                  const std::optional<std::string>& common_spec, const std::optional<std::string>& output) {
  const std::string graph_text = read_file(graph_path), witness_text = read_file(witness_path);
  ctx.log("verify",
          {{"graph", graph_path},
           {"witness", witness_path},
           {"require_common_prey", common_spec ? Json(*common_spec) : Json(nullptr)}},
          graph_text + witness_text);
  Graph g = io::parse_graph(graph_text);
  Witness w = io::parse_witness(witness_text);
  std::optional<CommonPreyCheck> common;
  if (common_spec) common = parse_common_prey(*common_spec);
  auto report = verify_witness(g, w, common);
  const std::string body = io::to_json(report).dump() + "\n";
  if (output) write_file(*output, body);
  ctx.out << body;
  return report.passed() ? pass : semantic_fail;
}

struct OracleArgs {
  std::string input;
  std::optional<std::size_t> max_k;
  std::uint64_t budget = OracleOptions{}.budget;
  std::size_t cap = OracleOptions{}.vertex_cap;
  std::optional<std::string> output;
};

inline int oracle(const Context& ctx, const OracleArgs& a) {
  const std::string text = read_file(a.input);
  ctx.log("oracle",
          {{"input", a.input},
           {"max_k", a.max_k ? Json(*a.max_k) : Json(nullptr)},
           {"budget", a.budget},
           {"cap", a.cap}},
          text);
  Graph g = io::parse_graph(text);
  OracleOptions options;
  options.max_k = a.max_k;
  options.budget = a.budget;
  options.vertex_cap = a.cap;
  OracleResult r;
  try {
    r = exact_competition_number(g, options);
  } catch (const PreconditionError& e) {
    ctx.err << "error: " << e.what() << "\n";
    return semantic_fail;
  }
  if (r.exact) {
    ctx.out << "k=" << r.lower << "\n";
  } else {
    ctx.out << "k in [" << r.lower << "," << r.upper << "]\n";
  }
  ctx.err << "search nodes=" << r.nodes << "\n";
  if (a.output) {
    if (!r.witness) {
      ctx.err << "no oracle witness to write\n";
    } else {
      write_file(*a.output, io::serialize(*r.witness));
    }
  }
  return pass;
}

struct GenerateArgs {
  std::string family;
  std::size_t h = 1;
  std::vector<std::size_t> lengths;
  std::size_t omega = 2;
  std::size_t holes = 1;
  std::uint64_t seed = 0;
  std::size_t n = 2;
  std::size_t extra = 0;
  std::optional<std::string> output;
  std::string format = "json";
};

inline int generate(const Context& ctx, const GenerateArgs& a) {
  Json config{{"family", a.family}, {"format", a.format}};
  Graph g;
  if (a.family == "flower") {
    config["h"] = a.h;
    config["lengths"] = a.lengths;
    ctx.log("generate", config, {});
    g = gen_flower(a.h, a.lengths);
  } else if (a.family == "family") {
    config["omega"] = a.omega;
    config["holes"] = a.holes;
    config["lengths"] = a.lengths;
    config["seed"] = a.seed;
    ctx.log("generate", config, {});
    g = gen_family({a.omega, a.holes, a.lengths, {}, a.seed});
  } else {
    config["n"] = a.n;
    config["extra"] = a.extra;
    config["seed"] = a.seed;
    ctx.log("generate", config, {});
    g = gen_triangle_free_random(a.n, a.extra, a.seed);
  }
  ctx.emit(a.output, a.format == "dot" ? io::to_dot(g) : io::to_json(g).dump() + "\n");
  return pass;
}

/// Runs one command line (without the program name). Never throws.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Competition numbers of graphs with edge-disjoint holes"};
  app.require_subcommand(1);
  // `--h` is the flower hole count, so help keeps only its long form.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", kVersion);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress the run log on standard error");

  std::string input, witness_path;
  std::optional<std::string> output;

  auto* an = app.add_subcommand("analyze", "Report holes, cliques and hypothesis flags");
  bool json = false;
  an->add_option("graph", input, "Graph JSON file")->required();
  an->add_flag("--json", json, "Print the report as JSON");
  an->add_option("-o,--output", output, "Also write the JSON report here");

  auto* co = app.add_subcommand("construct", "Build and self-verify a witness digraph");
  ConstructArgs ca;
  ca.dump_dir = std::filesystem::temp_directory_path().string();
  co->add_option("graph", ca.input, "Graph JSON file")->required();
  co->add_option("--method", ca.method)
      ->check(CLI::IsMember({"auto", "theorem1", "theorem2", "roberts", "chordal"}))
      ->capture_default_str();
  co->add_option("-o,--output", ca.output, "Witness file (prints to standard output otherwise)");
  co->add_option("--format", ca.format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  co->add_option("--clique", ca.clique, "Designated clique for theorem1, e.g. 1,2");
  co->add_option("--dump-dir", ca.dump_dir, "Where failing instances are written")->capture_default_str();
  co->add_option("--seed", ca.seed, "Seed for randomized vertex orders")->capture_default_str();
  co->add_flag("--oracle-fallback", ca.oracle_fallback, "Let auto fall back to the exact oracle on small graphs");

  auto* ve = app.add_subcommand("verify", "Check a witness against a graph");
  std::optional<std::string> common;
  ve->add_option("graph", input, "Graph JSON file")->required();
  ve->add_option("witness", witness_path, "Witness JSON file")->required();
  ve->add_option("--require-common-prey", common, "Clique and prey, e.g. 1,2,3:$k1");
  ve->add_option("-o,--output", output, "Also write the report here");

  auto* orc = app.add_subcommand("oracle", "Exact competition number for small graphs");
  OracleArgs oa;
  orc->add_option("graph", oa.input, "Graph JSON file")->required();
  orc->add_option("--max-k", oa.max_k, "Largest k to try");
  orc->add_option("--budget", oa.budget, "Search node budget")->capture_default_str();
  orc->add_option("--cap", oa.cap, "Largest vertex count accepted")->capture_default_str();
  orc->add_option("-o,--output", oa.output, "Write the oracle's witness here");

  auto* ge = app.add_subcommand("generate", "Emit a generated instance");
  GenerateArgs ga;
  ge->add_option("family", ga.family)->required()->check(CLI::IsMember({"flower", "family", "tf-random"}));
  ge->add_option("--h", ga.h, "Flower hole count")->capture_default_str();
  ge->add_option("--lengths", ga.lengths, "Hole lengths")->delimiter(',');
  ge->add_option("--omega", ga.omega, "Family clique number")->capture_default_str();
  ge->add_option("--holes", ga.holes, "Family hole count")->capture_default_str();
  ge->add_option("--seed", ga.seed)->capture_default_str();
  ge->add_option("--n", ga.n, "Vertex count for tf-random")->capture_default_str();
  ge->add_option("--extra", ga.extra, "Extra edges for tf-random")->capture_default_str();
  ge->add_option("-o,--output", ga.output, "Output file (standard output otherwise)");
  ge->add_option("--format", ga.format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return pass;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return io_error;
  }

  Context ctx{out, err, quiet};
  try {
    if (an->parsed()) return analyze(ctx, input, json, output);
    if (co->parsed()) return construct(ctx, ca);
    if (ve->parsed()) return verify(ctx, input, witness_path, common, output);
    if (orc->parsed()) return oracle(ctx, oa);
    return generate(ctx, ga);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return io_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return io_error;
  } catch (const GraphError& e) {
    err << "invalid graph: " << e.what() << "\n";
    return io_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return semantic_fail;
  }
}

}  // namespace compnum::cli
