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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli_app.hpp"
#include "compnum/compnum.hpp"
#include "oracles.hpp"

using namespace compnum;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "-q");
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("compnum-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = (dir_ / name).string();
    cli::write_file(p, text);
    return p;
  }

  std::string graph_file(const std::string& name, const Graph& g) { return write(name, io::to_json(g).dump()); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

Graph c6_chord14() {
  return Graph::build({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}});
}

}  // namespace

TEST_F(CliTest, AnalyzeExitCodes) {
  auto flower = graph_file("f3.json", gen_flower(3));
  auto pass = run({"analyze", flower});
  EXPECT_EQ(pass.code, 0);
  EXPECT_NE(pass.out.find("h=3 omega=4"), std::string::npos) << pass.out;
  EXPECT_NE(pass.out.find("hypotheses pass"), std::string::npos);

  auto fail = run({"analyze", graph_file("c6.json", c6_chord14())});
  EXPECT_EQ(fail.code, 2);
  EXPECT_NE(fail.out.find("holes_pairwise_edge_disjoint=0"), std::string::npos);

  auto bad = run({"analyze", write("bad.json", "{\"vertices\": [1,2], \"edges\": [[1,")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line"), std::string::npos) << bad.err;

  EXPECT_EQ(run({"analyze", path("missing.json")}).code, 1);
}

TEST_F(CliTest, AnalyzeJsonReport) {
  auto flower = graph_file("f2.json", gen_flower(2));
  auto r = run({"analyze", flower, "--json", "-o", path("report.json")});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["h"], 2);
  EXPECT_EQ(Json::parse(cli::read_file(path("report.json"))), j);
}

TEST_F(CliTest, ConstructThenVerify) {
  auto flower = graph_file("f2.json", gen_flower(2));
  auto c = run({"construct", flower, "--method", "theorem1", "-o", path("w.json")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out, "k=2\n");
  Witness w = io::parse_witness(cli::read_file(path("w.json")));
  EXPECT_EQ(w.k(), 2u);
  EXPECT_EQ(run({"verify", flower, path("w.json")}).code, 0);
  auto common = run({"verify", flower, path("w.json"), "--require-common-prey", "1,2,3:" + w.added.back().str()});
  EXPECT_EQ(common.code, 0) << common.out;
  auto wrong = run({"verify", flower, path("w.json"), "--require-common-prey", "1,2,3:" + w.added.front().str()});
  EXPECT_EQ(wrong.code, 2);
}

TEST_F(CliTest, VerifyReportsDeletedArc) {
  auto flower = graph_file("f2.json", gen_flower(2));
  ASSERT_EQ(run({"construct", flower, "-o", path("w.json")}).code, 0);
  Witness w = io::parse_witness(cli::read_file(path("w.json")));
  auto arcs = w.digraph.arcs();
  arcs.erase(arcs.begin());
  w.digraph = Digraph::build({w.digraph.vertices().begin(), w.digraph.vertices().end()}, arcs);
  auto broken = write("broken.json", io::serialize(w));
  auto r = run({"verify", flower, broken});
  EXPECT_EQ(r.code, 2);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["passed"], false);
  EXPECT_FALSE(j["missing_edges"].empty());
}

TEST_F(CliTest, ConstructRoutesAndErrors) {
  auto eight = graph_file("eight.json", oracle::figure_eight());
  auto r = run({"construct", eight, "--method", "auto", "-o", path("w.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k=3\n");
  Witness w = io::parse_witness(cli::read_file(path("w.json")));
  EXPECT_EQ(w.trace.front().step, "roberts");

  auto k4 = graph_file("k4.json", oracle::complete_graph(4));
  auto err = run({"construct", k4, "--method", "theorem1"});
  EXPECT_EQ(err.code, 2);
  EXPECT_NE(err.err.find("error"), std::string::npos);

  auto unsupported = graph_file(
      "c6t.json", Graph::build({1, 2, 3, 4, 5, 6, 7},
                               {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}, {1, 7}, {2, 7}}));
  EXPECT_EQ(run({"construct", unsupported}).code, 2);
  EXPECT_EQ(run({"construct", unsupported, "--oracle-fallback", "-o", path("o.json")}).code, 0);
  EXPECT_EQ(run({"construct", k4, "--method", "bogus"}).code, 1);
}

TEST_F(CliTest, ConstructDot) {
  auto c4 = graph_file("c4.json", oracle::cycle_graph(4));
  auto r = run({"construct", c4, "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("->"), std::string::npos);
}

TEST_F(CliTest, Oracle) {
  auto c4 = run({"oracle", graph_file("c4.json", oracle::cycle_graph(4))});
  EXPECT_EQ(c4.code, 0);
  EXPECT_EQ(c4.out, "k=2\n");
  auto p3 = run({"oracle", graph_file("p3.json", oracle::path_graph(3)), "-o", path("ow.json")});
  EXPECT_EQ(p3.out, "k=1\n");
  EXPECT_EQ(run({"verify", path("p3.json"), path("ow.json")}).code, 0);
  auto f3 = run({"oracle", graph_file("f3.json", gen_flower(3))});
  EXPECT_EQ(f3.code, 0);
  EXPECT_TRUE(f3.out == "k=2\n" || f3.out.rfind("k in [", 0) == 0) << f3.out;
  auto capped = run({"oracle", path("f3.json"), "--cap", "5"});
  EXPECT_EQ(capped.code, 2);
  auto bracket = run({"oracle", graph_file("c7.json", oracle::cycle_graph(7)), "--budget", "1"});
  EXPECT_EQ(bracket.code, 0);
  EXPECT_EQ(bracket.out.rfind("k in [", 0), 0u) << bracket.out;
}

TEST_F(CliTest, GenerateIsDeterministic) {
  auto a = run({"generate", "family", "--omega", "3", "--holes", "4", "--seed", "7"});
  auto b = run({"generate", "family", "--omega", "3", "--holes", "4", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto r = validate_hypotheses(io::parse_graph(a.out));
  EXPECT_EQ(r.omega, 3u);
  EXPECT_EQ(r.h, 4u);

  ASSERT_EQ(run({"generate", "flower", "--h", "3", "-o", path("f3.json")}).code, 0);
  EXPECT_EQ(io::parse_graph(cli::read_file(path("f3.json"))), gen_flower(3));

  auto tf = run({"generate", "tf-random", "--n", "8", "--extra", "2", "--seed", "1"});
  ASSERT_EQ(tf.code, 0) << tf.err;
  Graph g = io::parse_graph(tf.out);
  EXPECT_TRUE(is_triangle_free(g));
  EXPECT_EQ(g.size(), 9u);

  auto lengths = run({"generate", "flower", "--h", "2", "--lengths", "5,6"});
  EXPECT_EQ(io::parse_graph(lengths.out), gen_flower(2, {5, 6}));

  auto dot = run({"generate", "flower", "--h", "1", "--format", "dot"});
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);

  EXPECT_EQ(run({"generate", "family", "--omega", "5", "--holes", "2"}).code, 2);
}

TEST_F(CliTest, RunLogCarriesDigest) {
  std::ostringstream out, err;
  auto c4 = graph_file("c4.json", oracle::cycle_graph(4));
  ASSERT_EQ(cli::run({"analyze", c4}, out, err), 0);
  EXPECT_NE(err.str().find(std::string("compnum ") + cli::kVersion), std::string::npos);
  EXPECT_NE(err.str().find("input_fnv1a=" + cli::fnv1a(cli::read_file(c4))), std::string::npos);
}

TEST_F(CliTest, CorpusRoundTrip) {
  int n = 0;
  for (std::size_t h = 1; h <= 4; ++h) {
    for (std::size_t omega = 2; omega <= h + 1; ++omega) {
      auto g = graph_file("g.json", gen_family({omega, h, {}, {}, h * 10 + omega}));
      ASSERT_EQ(run({"construct", g, "-o", path("w.json")}).code, 0);
      EXPECT_EQ(run({"verify", g, path("w.json")}).code, 0);
      ++n;
    }
  }
  EXPECT_EQ(n, 10);
}
