#include "avn/report.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace avn;

namespace {

std::size_t parse_position(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(GraphParse, accepts_paper_format) {
  const Graph g = Graph::parse("6: 1-2,2-3,3-4,4-5,5-6");
  EXPECT_EQ(g, path_graph(6));
  EXPECT_EQ(g.to_string(), "6: 1-2, 2-3, 3-4, 4-5, 5-6");
  EXPECT_EQ(Graph::parse("1:").size(), 1);
  EXPECT_EQ(Graph::parse(" 3 : 1 - 3 ").edge_count(), 1);
}

TEST(GraphParse, errors_carry_positions) {
  EXPECT_EQ(parse_position([] { Graph::parse("x: 1-2"); }), 0u);
  EXPECT_EQ(parse_position([] { Graph::parse("3 1-2"); }), 2u);
  EXPECT_EQ(parse_position([] { Graph::parse("3: 1-4"); }), 5u);
  EXPECT_EQ(parse_position([] { Graph::parse("3: 1-2, 2-1"); }), 8u);
  EXPECT_EQ(parse_position([] { Graph::parse("3: 2-2"); }), 3u);
  EXPECT_EQ(parse_position([] { Graph::parse("3: 1-2 2-3"); }), 7u);
  EXPECT_EQ(parse_position([] { Graph::parse("17: 1-2"); }), 0u);
  try {
    Graph::parse("3: 1-4");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("(at column 6)"), std::string::npos);
  }
}

TEST(DistributionParse, keeps_caller_order) {
  const auto d = Distribution::parse("2,3,6|1,4,5", 6);
  EXPECT_EQ(d.to_string(), "2,3,6|1,4,5");
  EXPECT_EQ(d, Distribution::parse("1,4,5|2,3,6", 6));
  EXPECT_EQ(d.partners(0), 0b11000u);
}

TEST(DistributionParse, errors_carry_positions) {
  EXPECT_EQ(parse_position([] { Distribution::parse("1,2|3,7", 6); }), 6u);
  EXPECT_EQ(parse_position([] { Distribution::parse("1,2|2,3", 3); }), 4u);
  EXPECT_EQ(parse_position([] { Distribution::parse("1,,2|3", 3); }), 2u);
  EXPECT_EQ(parse_position([] { Distribution::parse("1;2|3", 3); }), 1u);
  EXPECT_EQ(parse_position([] { Distribution::parse("1,2", 3); }), 3u);
}

TEST(ReportJson, schema_fields) {
  SearchOptions opts;
  opts.with_witness = true;
  const auto r = make_report(path_graph(4), Distribution::parse("1,4|2,3", 4), opts);
  const auto j = report_to_json(r);
  EXPECT_EQ(j["graph"], "4: 1-2, 2-3, 3-4");
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["particles"], nlohmann::json::parse("[[1,4],[2,3]]"));
  EXPECT_EQ(j["verdict"], "allows");
  EXPECT_EQ(j["eor_table"][0]["X"], nlohmann::json::parse("[1]"));
  EXPECT_EQ(j["witness"]["equations"].size(), j["witness"]["operators"].size());
}

TEST(ReportJson, round_trip) {
  SearchOptions opts;
  opts.with_witness = true;
  for (int n = 3; n <= 5; ++n) {
    for (const auto& c : classify_all(n)) {
      for (const auto& d : all_partitions(n)) {
        const auto r = make_report(c.representative, d, opts);
        const auto text = report_to_json(r).dump();
        EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), r) << text;
      }
    }
  }
}

TEST(ReportJson, rejects_inconsistent_records) {
  auto j = report_to_json(make_report(path_graph(4), Distribution::parse("1,4|2,3", 4)));
  auto bad = j;
  bad["verdict"] = "blocks";
  EXPECT_THROW(report_from_json(bad), ContractViolation);
  bad = j;
  bad["verdict"] = "maybe";
  EXPECT_THROW(report_from_json(bad), ContractViolation);
  bad = j;
  bad["m"] = 3;
  EXPECT_THROW(report_from_json(bad), ContractViolation);
  bad = j;
  bad["eor_table"][0]["X"] = nlohmann::json::parse("[9]");
  EXPECT_THROW(report_from_json(bad), ContractViolation);
}

TEST(ClassJson, fields) {
  const auto c = classify_all(3).front();
  const auto j = class_to_json(c);
  EXPECT_EQ(j["class_id"], 1);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["orbit_size"], 2);
  EXPECT_EQ(j["edges"].size(), 2u);
  EXPECT_EQ(j["automorphisms"], 2);
}

TEST(DistributionTable, lays_out_particles_in_columns) {
  const auto r = make_report(path_graph(6), Distribution::parse("1,4,5|2,3,6", 6));
  EXPECT_EQ(distribution_table("LC6", {r}), "state  m  A      B\nLC6    2  1,4,5  2,3,6\n");
}

TEST(ReportText, shows_witness_equations) {
  SearchOptions opts;
  opts.with_witness = true;
  const auto text = report_text(make_report(complete_graph(3), Distribution::singletons(3), opts));
  EXPECT_NE(text.find("verdict: allows"), std::string::npos);
  EXPECT_NE(text.find("-X1 X2 X3 = 1"), std::string::npos);
  EXPECT_NE(text.find("X1 Z2 Z3 [g1]"), std::string::npos);
}
