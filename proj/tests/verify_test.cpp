#include <gtest/gtest.h>

#include "cdc/verify.hpp"
#include "support.hpp"

using namespace cdc;
using namespace cdc::testing;

namespace {

CycleDoubleCover k4_triangles() {
  CycleDoubleCover c;
  for (auto t : {std::vector<Vertex>{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}) c.cycles.push_back(Cycle::from_vertices(t));
  return c;
}

}  // namespace

TEST(VerifyCdc, AcceptsTrianglesOfK4) {
  const CdcVerdict v = verify_cdc(k4(), k4_triangles());
  EXPECT_TRUE(v.accepted);
  EXPECT_TRUE(v.witnesses.empty());
  ASSERT_EQ(v.usage.size(), 6u);
  for (const auto& u : v.usage) EXPECT_EQ(u.count, 2);
}

TEST(VerifyCdc, TruncatedCoverNamesEdges) {
  CycleDoubleCover c = k4_triangles();
  c.cycles.pop_back();
  const CdcVerdict v = verify_cdc(k4(), c);
  EXPECT_FALSE(v.accepted);
  std::vector<std::vector<Vertex>> under;
  for (const auto& w : v.witnesses) {
    EXPECT_EQ(w.kind, "edge_count");
    EXPECT_EQ(w.count, 1);
    under.push_back(w.vertices);
  }
  EXPECT_EQ(under, (std::vector<std::vector<Vertex>>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(VerifyCdc, RejectsForeignAndRepeatedCycles) {
  CycleDoubleCover c;
  c.cycles.push_back(Cycle::from_vertices({0, 1, 9}));
  const CdcVerdict v = verify_cdc(k4(), c);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.witnesses.front().kind, "invalid_cycle");
  EXPECT_EQ(v.witnesses.front().index, 0);

  CycleDoubleCover triple = k4_triangles();
  triple.cycles.push_back(triple.cycles[0]);
  EXPECT_FALSE(verify_cdc(k4(), triple).accepted);
  // a 4-cycle of K4 missing its chords is not a cycle of K3,3
  CycleDoubleCover bad;
  bad.cycles.push_back(Cycle::from_vertices({0, 1, 2}));
  EXPECT_EQ(verify_cdc(k33(), bad).witnesses.front().kind, "invalid_cycle");
}

TEST(VerifyRainbow, GoodAndAlmostGoodModes) {
  const EdgeColoredGraph sq(4, {{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 2}, {{0, 3}, 3}});
  const std::vector<Cycle> one{Cycle::from_vertices({0, 1, 2, 3})};
  EXPECT_TRUE(verify_rainbow_decomposition(sq, one, DecompositionMode::Good).accepted);

  const EdgeColoredGraph bad(4, {{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 1}, {{0, 3}, 2}});
  EXPECT_FALSE(verify_rainbow_decomposition(bad, one, DecompositionMode::Good).accepted);
  EXPECT_TRUE(verify_rainbow_decomposition(bad, one, DecompositionMode::AlmostGood, 1).accepted);
  const auto wrong = verify_rainbow_decomposition(bad, one, DecompositionMode::AlmostGood, 2);
  EXPECT_FALSE(wrong.accepted);
  EXPECT_EQ(wrong.witnesses.front().kind, "coloring");

  const auto partial = verify_rainbow_decomposition(sq, {}, DecompositionMode::Good);
  EXPECT_FALSE(partial.accepted);
  EXPECT_EQ(partial.witnesses.front().kind, "partition");
}

TEST(VerifyRainbow, AlmostRainbowPredicate) {
  const EdgeColoredGraph g(4, {{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 1}, {{0, 3}, 2}});
  EXPECT_TRUE(verify_is_almost_rainbow(g, Cycle::from_vertices({0, 1, 2, 3})));
  const EdgeColoredGraph split(4, {{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 0}, {{0, 3}, 2}});
  EXPECT_FALSE(verify_is_almost_rainbow(split, Cycle::from_vertices({0, 1, 2, 3})));
}
