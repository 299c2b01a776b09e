#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cdc/colored_graph.hpp"

namespace cdc {

enum class TransformKind { ContractTriangle, ContractEdge, MergeVertices, RewireDetour, ContractRectangle, Restrict };

std::string to_string(TransformKind k);

// A parent path realizing one child edge or one passage through a merged
// vertex, with the parent colors of its edges.
struct Route {
  std::vector<Vertex> path;
  std::vector<Color> colors;
  bool operator==(const Route&) const = default;
};

struct VertexRoutes {
  Vertex child = -1;
  std::vector<Route> routes;
  bool operator==(const VertexRoutes&) const = default;
};

// Record of one parent -> child step. Every parent edge is accounted for
// exactly once: inside an edge route, a vertex route, or `dropped`.
struct Transform {
  TransformKind kind = TransformKind::ContractEdge;
  std::size_t parent_vertex_count = 0;
  std::vector<Vertex> to_child;   // -1 for removed vertices
  std::vector<Vertex> to_parent;  // representative parent vertex
  std::vector<Route> edge_routes;  // aligned with child.graph().edges(); oriented u -> v
  std::vector<VertexRoutes> vertex_routes;
  std::vector<ColoredEdge> dropped;
  // Child edges whose color differs from the parent edge they came from.
  struct Recolor {
    Edge child_edge;
    Color from, to;
    bool operator==(const Recolor&) const = default;
  };
  std::vector<Recolor> recolors;
};

// Rebuilds the parent from the child and the record. Throws GraphError when
// the record is inconsistent with the child.
EdgeColoredGraph invert(const EdgeColoredGraph& child, const Transform& t);

class TransformBuilder {
 public:
  TransformBuilder(const EdgeColoredGraph& parent, TransformKind kind);

  // `absorbed` becomes part of `keep`'s child vertex.
  void merge(Vertex keep, Vertex absorbed);
  void remove_vertex(Vertex v);
  void drop_edge(Vertex a, Vertex b);
  // Consumes the parent edges along `path` and adds a child edge between the
  // images of its endpoints.
  void route_edge(std::vector<Vertex> path, Color child_color);
  // Consumes the parent edges along `path` as one passage through the merged
  // vertex containing `path`'s vertices.
  void route_vertex(std::vector<Vertex> path);

  struct Result {
    Transform transform;
    EdgeColoredGraph child;
  };
  // Remaining parent edges carry over unchanged. Throws GraphError on loops,
  // parallel edges, or removed vertices with unconsumed edges.
  Result finish() const;

 private:
  Vertex rep(Vertex v) const;
  void consume(Vertex a, Vertex b);

  const EdgeColoredGraph& parent_;
  TransformKind kind_;
  std::vector<Vertex> merged_into_;
  std::vector<char> removed_;
  std::vector<char> consumed_;
  std::vector<ColoredEdge> dropped_;
  struct Added {
    Route route;
    Color color;
  };
  std::vector<Added> added_;
  std::vector<std::pair<Vertex, Route>> passages_;
};

// Restriction of g to the given edges; vertices off those edges are removed.
TransformBuilder::Result restrict_to_edges(const EdgeColoredGraph& g, const std::vector<Edge>& keep);

// Maps a child cycle back to the parent, marking consumed passages in `used`
// (one flag per route of each Transform::vertex_routes entry). Returns nullopt if
// the result is not a simple cycle or a needed passage is missing.
std::optional<Cycle> lift_cycle(const Transform& t, const Cycle& child, std::vector<std::vector<char>>& used);

// Lifts a whole child decomposition in order. Returns nullopt on any failure.
std::optional<std::vector<Cycle>> lift_all(const Transform& t, const std::vector<Cycle>& child_cycles);

}  // namespace cdc
