#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc {

// graph6 (one graph). Accepts an optional ">>graph6<<" header and a trailing
// newline. Vertex counts up to 258047 are supported.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

// Lines "u v", optionally preceded by "n <count>". Blank lines and lines
// starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// Multi-line graph6 file, one graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

enum class GraphFormat { Graph6, EdgeList };
Graph parse_graph(std::string_view text, GraphFormat format);

}  // namespace cdc
