#include <gtest/gtest.h>

#include <chrono>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "syllnet/report_io.hpp"
#include "test_util.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "syllnet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = syllnet::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(elapsed, std::chrono::seconds(5)) << args[1];
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return (testutil::data_dir() / "fixtures" / name).string();
}

}  // namespace

TEST(Cli, Syllabify) {
  const auto r = run({"syllabify", "matematika", "sestra", "prst"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ma·te·ma·ti·ka\nse·stra\nprst\n");

  const auto cv = run({"syllabify", "sestra", "--rules",
                       (testutil::data_dir() / "rules" / "cv-simple.rules").string()});
  EXPECT_EQ(cv.out, "sest·ra\n");

  const auto bad = run({"syllabify", "mama", "hm"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_EQ(bad.out, "ma·ma\n");
  EXPECT_NE(bad.err.find("hm"), std::string::npos);
}

TEST(Cli, BuildAnalyzeMatchesGolden) {
  testutil::TempDir dir;
  const auto net = (dir / "net.graphml").string();
  const auto b = run({"build", fixture("fixture_corpus.txt"), "-o", net});
  ASSERT_EQ(b.code, 0) << b.err;

  const auto a = run({"analyze", net});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto got = json::parse(a.out);
  const auto want = json::parse(testutil::slurp(fixture("fixture_metrics.golden.json")));
  for (const auto& [key, value] : want.items()) {
    if (value.is_number_float()) {
      EXPECT_NEAR(got.at(key).get<double>(), value.get<double>(), 1e-12) << key;
    } else {
      EXPECT_EQ(got.at(key), value) << key;
    }
  }

  const auto report = (dir / "m.json").string();
  const auto dist = (dir / "d.tsv").string();
  const auto a2 = run({"analyze", net, "--report", report, "--degree-dist", dist, "--top", "3"});
  ASSERT_EQ(a2.code, 0) << a2.err;
  EXPECT_EQ(json::parse(testutil::slurp(report))["top_syllables"].size(), 3u);
  EXPECT_EQ(testutil::slurp(dist), "degree\tcount\n0\t1\n3\t4\n");
  EXPECT_TRUE(std::filesystem::exists(dir / "d.loglog.tsv"));
}

TEST(Cli, AnalyzeConventionFlags) {
  testutil::TempDir dir;
  const auto net = (dir / "net.csv").string();
  ASSERT_EQ(run({"build", fixture("fixture_corpus.txt"), "-o", net}).code, 0);
  const auto r = run({"analyze", net, "--degree-convention", "k-over-n", "--clustering-average",
                      "exclude-low-degree", "--path-normalization", "literal"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["avg_degree"].get<double>(), 1.2);
  EXPECT_DOUBLE_EQ(j["avg_clustering"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["avg_path_length"].get<double>(), 0.75);
  EXPECT_EQ(run({"analyze", net, "--degree-convention", "bogus"}).code, 1);
}

TEST(Cli, CompareIsReproducible) {
  testutil::TempDir dir;
  const auto net = (dir / "net.gexf").string();
  ASSERT_EQ(run({"build", fixture("fixture_corpus.txt"), "-o", net}).code, 0);
  const auto a = run({"compare", net, "--samples", "5", "--seed", "9"});
  const auto b = run({"compare", net, "--samples", "5", "--seed", "9"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["er"]["samples"], 5);
  EXPECT_EQ(j["er"]["edges"], 6);
}

TEST(Cli, ExportConvertsAndFilters) {
  testutil::TempDir dir;
  const auto gml = (dir / "fn.graphml").string();
  ASSERT_EQ(run({"build", fixture("fixture_corpus.txt"), "-o", gml, "--linking", "fn",
                 "--directed", "--weighted"})
                .code,
            0);
  const auto csv = (dir / "fn.csv").string();
  ASSERT_EQ(run({"export", gml, "-o", csv}).code, 0);
  EXPECT_EQ(syllnet::import_graph(csv), syllnet::import_graph(gml));

  const auto flat = (dir / "flat.csv").string();
  ASSERT_EQ(run({"export", gml, "-o", flat, "--undirected-unweighted", "--min-degree", "1"}).code, 0);
  const auto net = syllnet::import_graph(flat);
  EXPECT_FALSE(net.variant().directed);
  EXPECT_EQ(net.node_count(), 4u);
  EXPECT_EQ(net.edge_count(), 3u);
}

TEST(Cli, TopMatchesGolden) {
  const auto r = run({"top", fixture("star.csv"), "-k", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, testutil::slurp(fixture("star_table4.golden.txt")));
  const auto csv = run({"top", fixture("star.csv"), "-k", "2", "--style", "csv", "--label", "s"});
  EXPECT_EQ(csv.out, "s Syll.,s Degree\nma,6\nka,3\n");
}

TEST(Cli, TableSubcommand) {
  testutil::TempDir dir;
  const auto co = (dir / "co.csv").string();
  const auto fn = (dir / "fn.csv").string();
  ASSERT_EQ(run({"build", fixture("fixture_corpus.txt"), "-o", co}).code, 0);
  ASSERT_EQ(run({"build", fixture("fixture_corpus.txt"), "-o", fn, "--linking", "fn", "--directed"}).code, 0);

  const auto t1 = run({"table", "table1", "--net", "co=" + co, "--net", "fn=" + fn, "--style", "csv"});
  ASSERT_EQ(t1.code, 0) << t1.err;
  EXPECT_EQ(t1.out, ",co,fn\nNodes (N),5,5\nLinks (K),6,4\n");

  const auto t2 = run({"table", "table2", "--net", "co=" + co, "--samples", "3"});
  ASSERT_EQ(t2.code, 0) << t2.err;
  EXPECT_NE(t2.out.find("ER_co"), std::string::npos);

  const auto t3 = run({"table", "table3", "--net", "fn=" + fn, "--samples", "3"});
  ASSERT_EQ(t3.code, 0) << t3.err;
  EXPECT_NE(t3.out.find("n/a"), std::string::npos);
  EXPECT_EQ(run({"table", "table3", "--net", "a=" + fn, "--net", "b=" + fn}).code, 1);
  EXPECT_EQ(run({"table", "table5", "--net", "co=" + co}).code, 1);
}

TEST(Cli, RunWritesArtifacts) {
  testutil::TempDir dir;
  const auto out = dir / "out";
  const auto r = run({"run", fixture("fixture_corpus.txt"), "--out-dir", out.string(), "--samples", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* name : {"network.graphml", "metrics.json", "degree_distribution.tsv",
                           "degree_distribution.loglog.tsv", "comparison.json", "table1.txt",
                           "table1.csv", "table2.txt", "table4.txt", "table4.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(out / name)) << name;
  }
  const auto m = json::parse(testutil::slurp(out / "metrics.json"));
  EXPECT_EQ(m["n"], 5);
  EXPECT_EQ(m["k"], 6);
  EXPECT_NEAR(m["avg_clustering"].get<double>(), 0.8, 1e-12);
  EXPECT_NE(r.out.find("C/C_ER"), std::string::npos);
}

TEST(Cli, RunFirstNeighbourDirectedWeighted) {
  testutil::TempDir dir;
  const auto r = run({"run", fixture("fixture_corpus.txt"), "--out-dir", (dir / "o").string(),
                      "--linking", "fn", "--directed", "--weighted", "--samples", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("fn/directed/weighted"), std::string::npos);
  EXPECT_NE(r.out.find("K         4\n"), std::string::npos) << r.out;
  EXPECT_TRUE(std::filesystem::exists(dir / "o" / "table3.txt"));
  EXPECT_FALSE(std::filesystem::exists(dir / "o" / "table2.txt"));
}

TEST(Cli, ExitCodes) {
  testutil::TempDir dir;
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"build", "-o", (dir / "x.csv").string()}).code, 1);
  EXPECT_EQ(run({"build", (dir / "missing.txt").string(), "-o", (dir / "x.csv").string()}).code, 2);
  EXPECT_EQ(run({"run", (dir / "missing").string(), "--out-dir", (dir / "o").string()}).code, 2);

  const auto bad_graph = dir.write("bad.csv", "nonsense\n");
  EXPECT_EQ(run({"analyze", bad_graph.string()}).code, 2);

  const auto empty = dir.write("empty.txt", "123 !!!\n");
  EXPECT_EQ(run({"run", empty.string(), "--out-dir", (dir / "o").string()}).code, 3);

  const auto edgeless = dir.write("edgeless.csv", "# node a\n# node b\nsource,target\n");
  EXPECT_EQ(run({"analyze", edgeless.string()}).code, 3);
}
