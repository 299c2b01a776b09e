#pragma once

#include <string>
#include <vector>

#include "cdc/colored_graph.hpp"
#include "cdc/graph.hpp"
#include "cdc/line_graph.hpp"

namespace cdc {

struct Witness {
  std::string kind;  // "edge_count", "invalid_cycle", "coloring", "partition"
  std::vector<Vertex> vertices;
  int index = -1;
  int count = 0;
  std::string detail;
};

struct EdgeUsage {
  Edge edge;
  int count = 0;
};

struct CdcVerdict {
  bool accepted = false;
  std::vector<EdgeUsage> usage;
  std::vector<Witness> witnesses;
};

// Every cover member must be a cycle of g and every edge must be used
// exactly twice. Works from the raw edge list only.
CdcVerdict verify_cdc(const Graph& g, const CycleDoubleCover& cover);

enum class DecompositionMode { Good, AlmostGood };

struct DecompositionVerdict {
  bool accepted = false;
  std::vector<Witness> witnesses;
};

// Partition of E(g) into rainbow cycles; in AlmostGood mode exactly one
// member may instead be almost-rainbow at `bad_vertex`.
DecompositionVerdict verify_rainbow_decomposition(const EdgeColoredGraph& g, const std::vector<Cycle>& cycles,
                                                  DecompositionMode mode, int bad_vertex = -1);

bool verify_is_almost_rainbow(const EdgeColoredGraph& g, const Cycle& c);

}  // namespace cdc
