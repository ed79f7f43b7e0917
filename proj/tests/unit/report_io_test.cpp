#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "oracles.hpp"
#include "syllnet/error.hpp"
#include "syllnet/report_io.hpp"
#include "test_util.hpp"

using namespace syllnet;
using nlohmann::json;

namespace {

constexpr GraphFileFormat kFormats[] = {GraphFileFormat::kGraphMl, GraphFileFormat::kGexf,
                                        GraphFileFormat::kEdgeCsv};

SyllableNetwork triangle() {
  const std::vector<LabeledEdge> e{{"a", "b"}, {"b", "c"}, {"a", "c"}};
  return SyllableNetwork::from_labeled({}, {"a", "b", "c"}, e, {"wiki"});
}

// Random network of a given variant over Croatian-looking labels.
SyllableNetwork random_network(std::mt19937_64& rng, NetworkVariant v) {
  static const std::vector<std::string> labels{"ma", "če", "đu", "lju", "nja", "dže", "a",
                                               "prst", "ši", "ž", "o", "tr", "ć", "x&y", "<i>"};
  std::vector<std::string> nodes;
  for (const auto& l : labels)
    if (rng() % 3) nodes.push_back(l);
  std::vector<LabeledEdge> edges;
  for (const auto& a : nodes)
    for (const auto& b : nodes) {
      if (a == b || (!v.directed && a > b) || rng() % 4) continue;
      edges.push_back({a, b, v.weighted ? 1 + rng() % 9 : 1});
    }
  return SyllableNetwork::from_labeled(v, nodes, edges, {"p" + std::to_string(rng() % 100)});
}

}  // namespace

TEST(GraphIo, RoundTripEveryFormatAndVariant) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 15; ++round) {
    for (const auto& v : NetworkVariant::all()) {
      const auto net = random_network(rng, v);
      for (auto f : kFormats) {
        const auto text = serialize_graph(net, f);
        const auto back = parse_graph(text, f);
        ASSERT_EQ(back, net) << v.name() << " via " << to_string(f) << "\n" << text;
        ASSERT_EQ(serialize_graph(back, f), text);
      }
    }
  }
}

TEST(GraphIo, RoundTripThroughFiles) {
  testutil::TempDir dir;
  const auto net = triangle();
  for (const char* name : {"t.graphml", "t.gexf", "t.csv"}) {
    export_graph(net, format_from_extension(name), dir / name);
    EXPECT_EQ(import_graph(dir / name), net) << name;
  }
  EXPECT_THROW(import_graph(dir / "missing.csv"), IoError);
  EXPECT_THROW(format_from_extension("net.txt"), UsageError);
}

TEST(GraphIo, TriangleCsvLayout) {
  const auto csv = serialize_graph(triangle(), GraphFileFormat::kEdgeCsv);
  std::size_t rows = 0;
  bool header = false;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (line.starts_with("#")) continue;
    if (!header) {
      EXPECT_EQ(line, "source,target,weight");
      header = true;
      continue;
    }
    ++rows;
  }
  EXPECT_EQ(rows, 3u);
}

TEST(GraphIo, EmptyNetworkRoundTrips) {
  const SyllableNetwork empty{NetworkVariant{Linking::kFirstNeighbour, true, false}};
  for (auto f : kFormats) EXPECT_EQ(parse_graph(serialize_graph(empty, f), f), empty);
}

TEST(GraphIo, IsolatedNodesSurvive) {
  const std::vector<LabeledEdge> e{{"a", "b"}};
  const auto net = SyllableNetwork::from_labeled({}, {"a", "b", "z"}, e);
  for (auto f : kFormats) EXPECT_EQ(parse_graph(serialize_graph(net, f), f).node_count(), 3u);
}

TEST(GraphIo, PlainCsvWithoutMetadata) {
  const auto net = parse_graph("source,target\nb,a\nb,c\na,c\n", GraphFileFormat::kEdgeCsv);
  EXPECT_EQ(net.node_count(), 3u);
  EXPECT_EQ(net.edge_count(), 3u);
  EXPECT_FALSE(net.variant().directed);
  EXPECT_FALSE(net.variant().weighted);

  const auto weighted = parse_graph("source,target,weight\na,b,3\n", GraphFileFormat::kEdgeCsv);
  EXPECT_TRUE(weighted.variant().weighted);
  EXPECT_EQ(weighted.weight("a", "b"), 3u);
}

TEST(GraphIo, MalformedInputIsAParseError) {
  for (auto f : kFormats) EXPECT_THROW(parse_graph("", f), ParseError) << to_string(f);
  EXPECT_THROW(parse_graph("from,to\na,b\n", GraphFileFormat::kEdgeCsv), ParseError);
  EXPECT_THROW(parse_graph("source,target\na\n", GraphFileFormat::kEdgeCsv), ParseError);
  EXPECT_THROW(parse_graph("source,target,weight\na,b,x\n", GraphFileFormat::kEdgeCsv), ParseError);
  EXPECT_THROW(parse_graph("source,target,weight\na,b,0\n", GraphFileFormat::kEdgeCsv), ParseError);
  EXPECT_THROW(parse_graph("source,target\na,a\n", GraphFileFormat::kEdgeCsv), ParseError);
  EXPECT_THROW(parse_graph("source,target\na,b\na,b\n", GraphFileFormat::kEdgeCsv), ParseError);
  EXPECT_THROW(parse_graph("<graphml><graph>", GraphFileFormat::kGraphMl), ParseError);
  EXPECT_THROW(parse_graph("<gexf><graph><nodes/>", GraphFileFormat::kGexf), ParseError);
  try {
    parse_graph("source,target\na\n", GraphFileFormat::kEdgeCsv, "bad.csv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.csv"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(GraphIo, CsvRejectsUnwritableLabels) {
  const std::vector<LabeledEdge> e{{"a,b", "c"}};
  const auto net = SyllableNetwork::from_labeled({}, {"a,b", "c"}, e);
  EXPECT_THROW(serialize_graph(net, GraphFileFormat::kEdgeCsv), UsageError);
  EXPECT_EQ(parse_graph(serialize_graph(net, GraphFileFormat::kGraphMl), GraphFileFormat::kGraphMl), net);
}

TEST(GraphIo, FormatNames) {
  EXPECT_EQ(parse_graph_format("edge_csv"), GraphFileFormat::kEdgeCsv);
  EXPECT_EQ(parse_graph_format("gexf"), GraphFileFormat::kGexf);
  EXPECT_FALSE(parse_graph_format("dot").has_value());
  EXPECT_EQ(to_string(GraphFileFormat::kGraphMl), "graphml");
}

TEST(MetricsJson, FieldsAndConventions) {
  const auto m = analyze(triangle());
  const TopList top{{"a", 2}, {"b", 2}};
  const auto j = json::parse(metrics_json(m, &top));
  for (const char* key : {"n", "k", "avg_degree", "avg_path_length", "diameter", "avg_clustering",
                          "components", "giant_fraction", "k_over_n", "conventions"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["k"], 3);
  EXPECT_DOUBLE_EQ(j["avg_degree"].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(j["avg_clustering"].get<double>(), 1.0);
  EXPECT_EQ(j["conventions"]["avg_degree"], "2K/N");
  EXPECT_EQ(j["conventions"]["paths_over"], "largest_component");
  EXPECT_EQ(j["top_syllables"][1]["syllable"], "b");
  EXPECT_FALSE(json::parse(metrics_json(m)).contains("top_syllables"));
  EXPECT_EQ(metrics_json(m), metrics_json(analyze(triangle())));
}

TEST(ComparisonJson, Structure) {
  const auto report = compare_with_er(triangle(), 3, 11);
  const auto j = json::parse(comparison_json(report));
  EXPECT_EQ(j["er"]["samples"], 3);
  EXPECT_EQ(j["er"]["seed"], 11);
  EXPECT_EQ(j["er"]["nodes"], 3);
  EXPECT_EQ(j["er"]["edges"], 3);
  EXPECT_DOUBLE_EQ(j["er"]["mean"]["avg_clustering"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["clustering_ratio"].get<double>(), 1.0);
  EXPECT_EQ(j["real"]["diameter"], 1);
}

TEST(DegreeTsv, ExamplesAndReparse) {
  const auto tri = degree_distribution(triangle());
  EXPECT_EQ(degree_distribution_tsv(tri), "degree\tcount\n2\t3\n");

  const std::vector<LabeledEdge> e{{"h", "a"}, {"h", "b"}, {"h", "c"}, {"h", "d"}};
  const auto star = degree_distribution(SyllableNetwork::from_labeled({}, {"a", "b", "c", "d", "h"}, e));
  const auto text = degree_distribution_tsv(star);
  EXPECT_EQ(text, "degree\tcount\n1\t4\n4\t1\n");
  const auto back = parse_degree_distribution_tsv(text);
  EXPECT_EQ(back.counts, star.counts);
  EXPECT_EQ(back.total(), 5u);
  EXPECT_THROW(parse_degree_distribution_tsv("degree\tcount\n1\tx\n"), ParseError);

  const auto loglog = degree_distribution_loglog_tsv(star);
  EXPECT_TRUE(loglog.starts_with("ln_degree\tln_count\n"));
  EXPECT_NE(loglog.find("# ols_slope="), std::string::npos);
  EXPECT_EQ(loglog_companion("out/dist.tsv"), std::filesystem::path("out/dist.loglog.tsv"));

  testutil::TempDir dir;
  emit_degree_distribution(star, dir / "d.tsv");
  EXPECT_EQ(testutil::slurp(dir / "d.tsv"), text);
  EXPECT_EQ(testutil::slurp(dir / "d.loglog.tsv"), loglog);
}

TEST(Tables, Table1Counts) {
  TableInputs in;
  in.counts = {{"wiki", 1332, 8000}, {"blog", 859, 4000}};
  const auto t = emit_table(TableSpec::kTable1Counts, in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"", "wiki", "blog"}));
  EXPECT_EQ(t.rows[0], (std::vector<std::string>{"Nodes (N)", "1332", "859"}));
  EXPECT_EQ(t.rows[1], (std::vector<std::string>{"Links (K)", "8000", "4000"}));
  EXPECT_EQ(t.to_csv(), ",wiki,blog\nNodes (N),1332,859\nLinks (K),8000,4000\n");
}

TEST(Tables, Table2TriangleRow) {
  TableInputs in;
  in.comparisons.push_back({"tri", compare_with_er(triangle(), 2, 1)});
  const auto t = emit_table(TableSpec::kTable2Metrics, in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"", "tri", "ER_tri"}));
  ASSERT_EQ(t.rows.size(), 5u);
  EXPECT_EQ(t.rows[0], (std::vector<std::string>{"N", "3", "3"}));
  EXPECT_EQ(t.rows[1], (std::vector<std::string>{"⟨k⟩", "2.00", "2.00"}));
  EXPECT_EQ(t.rows[2], (std::vector<std::string>{"D", "1", "1"}));
  EXPECT_EQ(t.rows[3], (std::vector<std::string>{"L", "1.000", "1.000"}));
  EXPECT_EQ(t.rows[4], (std::vector<std::string>{"C", "1.000", "1.000"}));
}

TEST(Tables, Table3FirstNeighbour) {
  const std::vector<LabeledEdge> e{{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "c"}};
  const auto net = SyllableNetwork::from_labeled({Linking::kFirstNeighbour, true, false},
                                                 {"a", "b", "c"}, e);
  TableInputs in;
  in.first_neighbour = summarize_first_neighbour("fn", net, 2, 3);
  const auto t = emit_table(TableSpec::kTable3FirstNeighbour, in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"", "fn-Dir", "fn-Undir", "ER"}));
  EXPECT_EQ(t.rows[0], (std::vector<std::string>{"N", "3", "3", "3"}));
  EXPECT_EQ(t.rows[1], (std::vector<std::string>{"K", "4", "3", "3"}));
  EXPECT_EQ(t.rows[2], (std::vector<std::string>{"D", "2", "1", "1"}));
  EXPECT_EQ(t.rows[3], (std::vector<std::string>{"C", "n/a", "1.000", "1.000"}));
  EXPECT_THROW(summarize_first_neighbour("x", triangle(), 2, 3), UsageError);
}

TEST(Tables, Table4MatchesStarGolden) {
  const auto dir = testutil::data_dir() / "fixtures";
  const auto net = import_graph(dir / "star.csv");
  TableInputs in;
  in.top.push_back({"star", top_k_by_degree(net, 5)});
  const auto t = emit_table(TableSpec::kTable4TopSyllables, in);
  EXPECT_EQ(t.to_text(), testutil::slurp(dir / "star_table4.golden.txt"));
  EXPECT_EQ(t.to_text(), emit_table(TableSpec::kTable4TopSyllables, in).to_text());
}

TEST(Tables, Table4PadsShorterLists) {
  TableInputs in;
  in.top = {{"x", {{"ma", 3}, {"te", 1}}}, {"y", {{"o", 2}}}};
  const auto t = emit_table(TableSpec::kTable4TopSyllables, in);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[1], (std::vector<std::string>{"te", "1", "", ""}));
}

TEST(Tables, MissingInputs) {
  const TableInputs none;
  for (auto spec : {TableSpec::kTable1Counts, TableSpec::kTable2Metrics,
                    TableSpec::kTable3FirstNeighbour, TableSpec::kTable4TopSyllables}) {
    EXPECT_THROW(emit_table(spec, none), MissingInputError);
  }
  EXPECT_EQ(parse_table_spec("table3"), TableSpec::kTable3FirstNeighbour);
  EXPECT_FALSE(parse_table_spec("table5").has_value());
}

TEST(TextFiles, WriteCreatesParents) {
  testutil::TempDir dir;
  write_text_file(dir / "a/b/c.txt", "hello");
  EXPECT_EQ(read_text_file(dir / "a/b/c.txt"), "hello");
  EXPECT_THROW(read_text_file(dir / "nope"), IoError);
}
