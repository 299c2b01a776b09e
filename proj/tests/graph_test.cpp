#include <gtest/gtest.h>

#include <queue>
#include <set>

#include "cdc/error.hpp"
#include "cdc/graph.hpp"
#include "support.hpp"

using namespace cdc;
using namespace cdc::testing;

namespace {

// Number of components among non-isolated vertices, ignoring vertex `skip`
// and edge `cut`.
int components(const Graph& g, Vertex skip = -1, std::optional<Edge> cut = std::nullopt) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || static_cast<Vertex>(s) == skip || g.degree(static_cast<Vertex>(s)) == 0) continue;
    ++count;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(s));
    seen[s] = 1;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (w == skip || seen[w] || (cut && Edge(u, w) == *cut)) continue;
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  return count;
}

Graph random_graph(Rng& rng, std::size_t n, std::size_t tries) {
  std::set<Edge> es;
  for (std::size_t i = 0; i < tries; ++i) {
    const Vertex a = static_cast<Vertex>(rng.below(n)), b = static_cast<Vertex>(rng.below(n));
    if (a != b) es.insert(Edge(a, b));
  }
  std::vector<Edge> v(es.begin(), es.end());
  return Graph(n, v);
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(3, {{-1, 2}}), GraphError);
}

TEST(Graph, EdgesSortedAndIndexed) {
  Graph g(4, {{2, 3}, {1, 0}, {0, 2}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(0, 2));
  EXPECT_EQ(g.edge_index(3, 2), 2u);
  EXPECT_FALSE(g.edge_index(1, 3).has_value());
  EXPECT_EQ(g.non_isolated_count(), 4u);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(Cycle, CanonicalForm) {
  Cycle a = Cycle::from_vertices({3, 1, 2});
  Cycle b = Cycle::from_vertices({2, 1, 3});
  Cycle c = Cycle::from_vertices({1, 3, 2});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.vertices(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(Cycle::from_vertices({4, 0, 7, 2}).vertices(), (std::vector<Vertex>{0, 4, 2, 7}));
  EXPECT_THROW(Cycle::from_vertices({0, 1}), GraphError);
  EXPECT_THROW(Cycle::from_vertices({0, 1, 0, 2}), GraphError);
}

TEST(Cycle, WalkAndEdges) {
  Cycle c = Cycle::from_vertices({0, 1, 2, 3});
  EXPECT_EQ(c.walk_from(2, 1), (std::vector<Vertex>{2, 1, 0, 3}));
  EXPECT_EQ(c.walk_from(2, 3), (std::vector<Vertex>{2, 3, 0, 1}));
  EXPECT_EQ(c.edges().size(), 4u);
  EXPECT_TRUE(is_cycle_of(k4(), c));
  EXPECT_FALSE(is_cycle_of(k33(), Cycle::from_vertices({0, 1, 3})));
}

TEST(Graph, CanonicalGraphsAreCubicBridgeless) {
  for (const Graph& g : {k4(), prism(), k33(), petersen()}) {
    EXPECT_TRUE(is_cubic(g));
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(find_bridges(g).empty());
  }
  EXPECT_EQ(find_bridges(bridged()), (std::vector<Edge>{Edge(4, 5)}));
}

TEST(Graph, BridgesMatchEdgeDeletionOracle) {
  Rng rng(1);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng.below(12);
    const Graph g = random_graph(rng, n, rng.below(3 * n));
    std::vector<Edge> expect;
    const int base = components(g);
    for (const Edge& e : g.edges())
      if (components(g, -1, e) > base) expect.push_back(e);
    EXPECT_EQ(find_bridges(g), expect) << "iteration " << iter;
  }
}

TEST(Graph, BlockDecompositionProperties) {
  Rng rng(2);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng.below(12);
    const Graph g = random_graph(rng, n, rng.below(3 * n));
    const BlockDecomposition b = block_decomposition(g);
    // blocks partition the edges
    std::vector<Edge> all;
    for (const auto& blk : b.blocks) all.insert(all.end(), blk.begin(), blk.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, g.edges());
    // cut vertices agree with vertex deletion
    std::vector<Vertex> cuts;
    const int base = components(g);
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(static_cast<Vertex>(v)) == 0) continue;
      int c = components(g, static_cast<Vertex>(v));
      if (c > base) cuts.push_back(static_cast<Vertex>(v));
    }
    EXPECT_EQ(b.cut_vertices, cuts) << "iteration " << iter;
    // every cut vertex lies in at least two blocks
    for (Vertex v : b.cut_vertices) {
      int in = 0;
      for (const auto& vs : b.block_vertices) in += std::binary_search(vs.begin(), vs.end(), v);
      EXPECT_GE(in, 2);
    }
    // block-cut tree of each component is a tree: nodes - 1 == edges
    if (is_connected(g) && g.edge_count() > 0) {
      EXPECT_EQ(b.block_cut_tree.size() + 1, b.blocks.size() + b.cut_vertices.size());
    }
  }
}

TEST(Graph, ContractEdge) {
  const Contraction c = contract_edge(k33(), Edge(0, 3));
  EXPECT_EQ(c.graph.vertex_count(), 5u);
  EXPECT_EQ(c.merged, 4);
  EXPECT_EQ(c.graph.degree(c.merged), 4u);
  EXPECT_EQ(c.graph.edge_count(), 8u);
  EXPECT_EQ(c.vertex_map[0], c.merged);
  EXPECT_EQ(c.vertex_map[3], c.merged);
  try {
    contract_edge(k4(), Edge(0, 1));
    FAIL() << "expected ContractionError";
  } catch (const ContractionError& e) {
    EXPECT_EQ(e.common_neighbor(), 2);
  }
}

TEST(Graph, SubdivideAndRemove) {
  const Subdivision s = subdivide_edge(k4(), Edge(1, 2));
  EXPECT_EQ(s.new_vertex, 4);
  EXPECT_TRUE(s.graph.has_edge(1, 4));
  EXPECT_TRUE(s.graph.has_edge(2, 4));
  EXPECT_FALSE(s.graph.has_edge(1, 2));
  const std::vector<Edge> drop{Edge(0, 1), Edge(2, 3)};
  const Graph r = remove_edges(k4(), drop);
  EXPECT_EQ(r.edge_count(), 4u);
  EXPECT_FALSE(r.has_edge(0, 1));
}

TEST(Graph, ComponentsGiveIsolatedVerticesTheirOwnId) {
  Graph g(5, {{0, 1}, {2, 3}});
  auto c = connected_components(g);
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[2], c[3]);
  EXPECT_NE(c[0], c[2]);
  EXPECT_NE(c[4], c[0]);
  EXPECT_NE(c[4], c[2]);
  EXPECT_FALSE(is_connected(g));
}
