#include <gtest/gtest.h>

#include "cdc/transform.hpp"
#include "support.hpp"

using namespace cdc;

namespace {

// A rainbow hexagon.
EdgeColoredGraph hexagon() {
  std::vector<ColoredEdge> es;
  for (int i = 0; i < 6; ++i) es.push_back({Edge(i, (i + 1) % 6), i});
  return EdgeColoredGraph(6, es);
}

}  // namespace

TEST(Transform, RouteEdgeShortensPath) {
  const EdgeColoredGraph g = hexagon();
  TransformBuilder b(g, TransformKind::ContractEdge);
  b.route_edge({1, 2, 3}, 2);
  b.remove_vertex(2);
  const auto r = b.finish();
  EXPECT_EQ(r.child.vertex_count(), 5u);
  EXPECT_EQ(r.child.edge_count(), 5u);
  EXPECT_EQ(r.transform.to_child[2], -1);
  EXPECT_EQ(r.transform.to_child[3], 2);
  ASSERT_EQ(r.transform.recolors.size(), 1u);
  EXPECT_EQ(r.transform.recolors[0].from, 1);
  EXPECT_EQ(r.transform.recolors[0].to, 2);
  EXPECT_EQ(invert(r.child, r.transform), g);
}

TEST(Transform, MergeWithPassage) {
  const EdgeColoredGraph g = hexagon();
  TransformBuilder b(g, TransformKind::ContractEdge);
  b.merge(0, 1);
  b.route_vertex({0, 1});
  const auto r = b.finish();
  EXPECT_EQ(r.child.vertex_count(), 5u);
  EXPECT_EQ(r.child.edge_count(), 5u);
  ASSERT_EQ(r.transform.vertex_routes.size(), 1u);
  EXPECT_EQ(r.transform.vertex_routes[0].child, 0);
  EXPECT_EQ(invert(r.child, r.transform), g);

  // the child pentagon lifts back to the hexagon through the passage
  std::vector<Vertex> seq;
  for (std::size_t i = 0; i < r.child.vertex_count(); ++i) seq.push_back(static_cast<Vertex>(i));
  const auto lifted = lift_all(r.transform, {Cycle::from_vertices(seq)});
  ASSERT_TRUE(lifted.has_value());
  EXPECT_EQ(lifted->front(), Cycle::from_vertices({0, 1, 2, 3, 4, 5}));
}

TEST(Transform, Errors) {
  const EdgeColoredGraph g = hexagon();
  {
    TransformBuilder b(g, TransformKind::ContractEdge);
    b.route_edge({0, 1, 2}, 0);
    EXPECT_THROW(b.route_edge({1, 2}, 0), GraphError);  // consumed twice
  }
  {
    TransformBuilder b(g, TransformKind::ContractEdge);
    b.remove_vertex(2);
    EXPECT_THROW(b.finish(), GraphError);  // removed vertex keeps edges
  }
  {
    // merging the ends of an edge without consuming it gives a loop
    TransformBuilder b(g, TransformKind::ContractEdge);
    b.merge(0, 1);
    EXPECT_THROW(b.finish(), GraphError);
  }
  {
    // merging 0 and 2 makes 0-1 and 1-2 parallel
    TransformBuilder b(g, TransformKind::MergeVertices);
    b.merge(0, 2);
    EXPECT_THROW(b.finish(), GraphError);
  }
  {
    TransformBuilder b(g, TransformKind::ContractEdge);
    EXPECT_THROW(b.route_edge({0, 2}, 0), GraphError);  // not an edge
  }
}

TEST(Transform, InvertDetectsTampering) {
  const EdgeColoredGraph g = hexagon();
  TransformBuilder b(g, TransformKind::ContractEdge);
  b.route_edge({1, 2, 3}, 2);
  b.remove_vertex(2);
  auto r = b.finish();
  Transform bad = r.transform;
  bad.recolors.clear();
  EXPECT_THROW(invert(r.child, bad), GraphError);
  bad = r.transform;
  bad.edge_routes.pop_back();
  EXPECT_THROW(invert(r.child, bad), GraphError);
}

TEST(Transform, RestrictKeepsDroppedEdges) {
  const EdgeColoredGraph g = hexagon();
  const std::vector<Edge> keep{Edge(0, 1), Edge(1, 2)};
  const auto r = restrict_to_edges(g, keep);
  EXPECT_EQ(r.child.vertex_count(), 3u);
  EXPECT_EQ(r.child.edge_count(), 2u);
  EXPECT_EQ(r.transform.dropped.size(), 4u);
  EXPECT_EQ(invert(r.child, r.transform), g);
}

TEST(Transform, LiftFailsOnUnusedPassage) {
  const EdgeColoredGraph g = hexagon();
  TransformBuilder b(g, TransformKind::ContractEdge);
  b.merge(0, 1);
  b.route_vertex({0, 1});
  const auto r = b.finish();
  EXPECT_FALSE(lift_all(r.transform, {}).has_value());
}
