#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "cdc/line_graph.hpp"
#include "cdc/oracle.hpp"
#include "cdc/verify.hpp"
#include "support.hpp"

using namespace cdc;
using namespace cdc::testing;

namespace {

// Cycles as connected 2-regular edge subsets.
std::set<Cycle> cycles_by_subsets(const Graph& g) {
  std::set<Cycle> out;
  const std::size_t m = g.edge_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) es.push_back(g.edges()[i]);
    const Graph h(g.vertex_count(), es);
    bool ok = true;
    for (std::size_t v = 0; v < h.vertex_count() && ok; ++v)
      ok = h.degree(static_cast<Vertex>(v)) == 0 || h.degree(static_cast<Vertex>(v)) == 2;
    if (!ok) continue;
    // walk from one endpoint; connected iff the walk uses every edge
    std::vector<Vertex> seq{es[0].u};
    Vertex prev = es[0].u, cur = es[0].v;
    while (cur != es[0].u) {
      seq.push_back(cur);
      auto nb = h.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (seq.size() == es.size()) out.insert(Cycle::from_vertices(seq));
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), es);
}

}  // namespace

TEST(EnumerateCycles, MatchesSubsetOracle) {
  for (const Graph& g : {k4(), prism(), k33(), petersen(), bridged()}) {
    const auto cycles = enumerate_cycles(g);
    const auto expect = cycles_by_subsets(g);
    EXPECT_EQ(std::set<Cycle>(cycles.begin(), cycles.end()), expect);
    EXPECT_TRUE(std::is_sorted(cycles.begin(), cycles.end()));
    EXPECT_EQ(std::adjacent_find(cycles.begin(), cycles.end()), cycles.end());
    EXPECT_GE(cycles.size(), g.edge_count() - g.vertex_count() + 1);
  }
  EXPECT_EQ(enumerate_cycles(k4()).size(), 7u);
  EXPECT_EQ(enumerate_cycles(k33()).size(), 15u);
  EXPECT_EQ(enumerate_cycles(petersen()).size(), 57u);
}

TEST(EnumerateCycles, SmallCases) {
  EXPECT_EQ(enumerate_cycles(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})).size(), 1u);
  EXPECT_TRUE(enumerate_cycles(Graph(4, {{0, 1}, {1, 2}, {1, 3}})).empty());
  const auto short_ones = enumerate_cycles(petersen(), 5);
  EXPECT_EQ(short_ones.size(), 12u);
  for (const Cycle& c : short_ones) EXPECT_EQ(c.length(), 5u);
}

TEST(BruteForceCdc, KnownAnswers) {
  for (const Graph& g : {k4(), prism(), k33(), petersen()}) {
    for (BranchRule rule : {BranchRule::LowestIndex, BranchRule::MostConstrained}) {
      const CdcSearch s = brute_force_cdc(g, {}, rule);
      ASSERT_EQ(s.status, SearchStatus::Found);
      EXPECT_TRUE(verify_cdc(g, *s.cover).accepted);
    }
  }
  EXPECT_EQ(brute_force_cdc(bridged()).status, SearchStatus::Absent);
  EXPECT_EQ(brute_force_cdc(bridged(), {}, BranchRule::MostConstrained).status, SearchStatus::Absent);
}

TEST(BruteForceCdc, BudgetGivesIndeterminate) {
  Budget b;
  b.max_nodes = 1;
  EXPECT_EQ(brute_force_cdc(petersen(), b).status, SearchStatus::Indeterminate);
}

TEST(BruteForceRainbow, KnownAnswers) {
  const ColoredLineGraph lg = build_line_graph(k4());
  const RainbowSearch s = brute_force_rainbow_decomposition(lg.lg);
  ASSERT_EQ(s.status, SearchStatus::Found);
  EXPECT_TRUE(verify_rainbow_decomposition(lg.lg, s.cycles, DecompositionMode::Good).accepted);
  EXPECT_TRUE(verify_cdc(k4(), cover_from_decomposition(lg, s.cycles)).accepted);

  const EdgeColoredGraph mono(3, {{{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 0}});
  EXPECT_EQ(brute_force_rainbow_decomposition(mono).status, SearchStatus::Absent);

  const EdgeColoredGraph c4(4, {{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 2}, {{0, 3}, 3}});
  const RainbowSearch r = brute_force_rainbow_decomposition(c4);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.cycles, (std::vector<Cycle>{Cycle::from_vertices({0, 1, 2, 3})}));

  // almost-good C4: the only member is almost-rainbow at vertex 1
  const EdgeColoredGraph ag(4, {{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 2}, {{0, 3}, 3}});
  const RainbowSearch a = brute_force_rainbow_decomposition(ag);
  ASSERT_EQ(a.status, SearchStatus::Found);
  EXPECT_TRUE(verify_rainbow_decomposition(ag, a.cycles, DecompositionMode::AlmostGood, 1).accepted);
}

TEST(BruteForceRainbow, PetersenLineGraph) {
  const ColoredLineGraph lg = build_line_graph(petersen());
  const RainbowSearch s = brute_force_rainbow_decomposition(lg.lg);
  ASSERT_EQ(s.status, SearchStatus::Found);
  EXPECT_TRUE(verify_cdc(petersen(), cover_from_decomposition(lg, s.cycles)).accepted);
}

TEST(Generator, ValidAndDeterministic) {
  for (std::size_t n = 4; n <= 20; n += 2) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = random_cubic(n, seed);
      EXPECT_EQ(g.vertex_count(), n);
      EXPECT_TRUE(is_cubic(g));
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(find_bridges(g).empty());
      EXPECT_EQ(g, random_cubic(n, seed));
    }
  }
  EXPECT_TRUE(are_isomorphic(random_cubic(4, 3), k4()));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_cubic(6, seed);
    EXPECT_TRUE(are_isomorphic(g, k33()) || are_isomorphic(g, prism()));
  }
}

TEST(Generator, RejectsBadOrder) {
  EXPECT_THROW(random_cubic(5, 0), PreconditionError);
  EXPECT_THROW(random_cubic(2, 0), PreconditionError);
}

TEST(Isomorphism, RelabelingAndDistinctGraphs) {
  Rng rng(9);
  for (const Graph& g : {k4(), prism(), k33(), petersen()}) {
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    EXPECT_TRUE(are_isomorphic(g, relabel(g, perm)));
  }
  EXPECT_FALSE(are_isomorphic(prism(), k33()));
}

// Connected bridgeless cubic graphs by order; pairwise non-isomorphism
// checked here, counts cross-checked with networkx.
TEST(EnumerateCubic, Counts) {
  const std::vector<std::pair<std::size_t, std::size_t>> expect{{4, 1}, {6, 2}, {8, 5}, {10, 18}};
  for (auto [n, count] : expect) {
    const auto gs = enumerate_cubic_bridgeless(n);
    EXPECT_EQ(gs.size(), count) << "n = " << n;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      EXPECT_TRUE(is_cubic(gs[i]) && is_connected(gs[i]) && find_bridges(gs[i]).empty());
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(are_isomorphic(gs[i], gs[j]));
    }
  }
}
