#pragma once

#include <vector>

#include "cdc/colored_graph.hpp"
#include "cdc/graph.hpp"

namespace cdc {

struct CycleDoubleCover {
  std::vector<Cycle> cycles;
  bool operator==(const CycleDoubleCover&) const = default;
};

// L-vertex i is base edge base.edges()[i]; the L-edge between two base edges
// is colored by their shared endpoint, so color ids are base vertex ids.
struct ColoredLineGraph {
  Graph base;
  EdgeColoredGraph lg;
  std::vector<Edge> edge_of_vertex;
  std::vector<Vertex> vertex_of_color;
};

// Throws PreconditionError naming a vertex of degree other than 3.
ColoredLineGraph build_line_graph(const Graph& g);

Cycle lift_rainbow_cycle(const ColoredLineGraph& lg, const Cycle& c);
Cycle project_cycle(const ColoredLineGraph& lg, const Cycle& c);
// Checks that `cycles` are rainbow and partition E(L) before lifting.
CycleDoubleCover cover_from_decomposition(const ColoredLineGraph& lg, const std::vector<Cycle>& cycles);

}  // namespace cdc
