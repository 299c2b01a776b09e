#include <gtest/gtest.h>

#include "cdc/json_io.hpp"
#include "cdc/verify.hpp"
#include "support.hpp"

using namespace cdc;
using namespace cdc::testing;

TEST(JsonIo, CoverRoundTrip) {
  const CdcResult r = cycle_double_cover(petersen());
  ASSERT_TRUE(r.cover.has_value());
  const Json j = cover_to_json(petersen(), *r.cover);
  EXPECT_EQ(j["vertex_count"], 10);
  EXPECT_EQ(j["edge_usage"].size(), 15u);
  for (const Json& u : j["edge_usage"]) EXPECT_EQ(u["count"], 2);
  EXPECT_EQ(cover_from_json(j), *r.cover);
  EXPECT_EQ(cover_from_json(Json::parse(j.dump())), *r.cover);
  EXPECT_EQ(cover_from_json(j["cycles"]), *r.cover);
}

TEST(JsonIo, CoverErrors) {
  EXPECT_THROW(cover_from_json(Json::object()), ParseError);
  EXPECT_THROW(cover_from_json(Json::parse(R"({"cycles": 3})")), ParseError);
  EXPECT_THROW(cover_from_json(Json::parse(R"([[0, 1, "x"]])")), ParseError);
  EXPECT_THROW(cover_from_json(Json::parse(R"([[0, 1]])")), ParseError);
  try {
    cover_from_json(Json::parse(R"([[0, 1, 2], [0, 1, 0]])"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(JsonIo, Verdicts) {
  CycleDoubleCover cover{{Cycle::from_vertices({0, 1, 2}), Cycle::from_vertices({0, 1, 3})}};
  const Json j = to_json(verify_cdc(k4(), cover));
  EXPECT_FALSE(j["accepted"]);
  EXPECT_FALSE(j["witnesses"].empty());
  EXPECT_EQ(j["witnesses"][0]["kind"], "edge_count");

  const GoodnessReport rep = check_goodness(EdgeColoredGraph(3, {{{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 1}}));
  const Json g = to_json(rep);
  EXPECT_EQ(g["verdict"], "NotGood");
  EXPECT_EQ(g["violations"].size(), rep.violations.size());
}

TEST(JsonIo, TraceIsStable) {
  const ColoredLineGraph lg = build_line_graph(k33());
  const DecompositionTrace t = decompose(lg.lg);
  const Json j = to_json(t);
  EXPECT_TRUE(j["success"]);
  EXPECT_EQ(j["cycles"].size(), t.cycles.size());
  EXPECT_EQ(j["steps"].size(), t.steps.size());
  EXPECT_FALSE(j.contains("failure"));
  EXPECT_EQ(j.dump(), to_json(decompose(lg.lg)).dump());
}

TEST(JsonIo, CaseFailureEmbedsReplayableGraph) {
  CaseFailure f;
  f.graph = build_line_graph(k4()).lg;
  f.attempted = CaseTag::Case2_1;
  f.cycle = Cycle::from_vertices({0, 1, 2});
  f.reason = "test";
  const Json j = to_json(f);
  EXPECT_EQ(j["attempted"], "Case2_1");
  EXPECT_EQ(parse_colored_edge_list(j["graph"].get<std::string>()), f.graph);
  EXPECT_EQ(j["cycle"], Json({0, 1, 2}));
}
