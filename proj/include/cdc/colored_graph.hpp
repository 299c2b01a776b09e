#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/error.hpp"
#include "cdc/graph.hpp"

namespace cdc {

struct ColoredEdge {
  Edge edge;
  Color color = 0;
  auto operator<=>(const ColoredEdge&) const = default;
};

class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  // `colors` is aligned with graph.edges().
  EdgeColoredGraph(Graph graph, std::vector<Color> colors);
  EdgeColoredGraph(std::size_t vertex_count, std::span<const ColoredEdge> edges);
  EdgeColoredGraph(std::size_t vertex_count, std::initializer_list<ColoredEdge> edges)
      : EdgeColoredGraph(vertex_count, std::span<const ColoredEdge>(edges.begin(), edges.size())) {}

  const Graph& graph() const { return graph_; }
  const std::vector<Color>& colors() const { return colors_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  bool has_edge(Vertex a, Vertex b) const { return graph_.has_edge(a, b); }
  // Throws GraphError if {a,b} is not an edge.
  Color color(Vertex a, Vertex b) const;
  std::vector<ColoredEdge> colored_edges() const;
  // Distinct colors on edges at v, sorted.
  std::vector<Color> incident_colors(Vertex v) const;
  std::size_t color_degree(Vertex v) const { return incident_colors(v).size(); }

  bool operator==(const EdgeColoredGraph&) const = default;

 private:
  Graph graph_;
  std::vector<Color> colors_;
};

EdgeColoredGraph remove_edges(const EdgeColoredGraph& g, std::span<const Edge> edges);
EdgeColoredGraph remove_cycle(const EdgeColoredGraph& g, const Cycle& c);

struct ColorClass {
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
};

std::map<Color, ColorClass> color_classes(const EdgeColoredGraph& g);

enum class VertexClass { TypeI, TypeII, Bad, Isolated };

std::string to_string(VertexClass c);

class NotClassifiable : public Error {
 public:
  NotClassifiable(Vertex v, std::size_t degree, std::size_t color_degree)
      : Error("vertex " + std::to_string(v) + " not classifiable: degree " + std::to_string(degree) +
              ", color degree " + std::to_string(color_degree)),
        vertex(v), degree(degree), color_degree(color_degree) {}
  Vertex vertex;
  std::size_t degree;
  std::size_t color_degree;
};

VertexClass classify_vertex(const EdgeColoredGraph& g, Vertex v);

enum class Verdict { Good, AlmostGood, NotGood };

std::string to_string(Verdict v);

// One failed condition. `vertices` holds the witness: a single vertex for
// conditions 1, 2, 4 and 6, a triangle for 3, the spanned vertex set for 5.
struct Violation {
  int condition = 0;
  std::vector<Vertex> vertices;
  std::optional<Color> color;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct GoodnessReport {
  Verdict verdict = Verdict::Good;
  std::optional<Vertex> bad_vertex;
  std::vector<Violation> violations;
  bool operator==(const GoodnessReport&) const = default;
};

GoodnessReport check_goodness(const EdgeColoredGraph& g);
bool is_good_or_almost_good(const GoodnessReport& r);

// Degree-4 cut vertices whose edges split 2+2 into different components of
// G - v with each pair monochromatic. Throws PreconditionError on odd degree.
std::vector<Vertex> find_type_x_vertices(const EdgeColoredGraph& g);

struct Pseudoblocks {
  std::vector<Vertex> vertices1, vertices2;
  std::vector<Edge> edges1, edges2;
};

Pseudoblocks pseudoblocks(const EdgeColoredGraph& g, Vertex v);

struct XBlockDecomposition {
  std::vector<std::vector<Vertex>> x_blocks;
  std::vector<std::vector<Edge>> x_block_edges;
  std::vector<Vertex> x_cut_vertices;
  // (block a, block b, shared Type-X vertex), a < b.
  struct ForestEdge {
    std::size_t a, b;
    Vertex via;
    auto operator<=>(const ForestEdge&) const = default;
  };
  std::vector<ForestEdge> forest;
};

XBlockDecomposition x_block_decomposition(const EdgeColoredGraph& g);

std::optional<Cycle> find_rainbow_triangle(const EdgeColoredGraph& g);

struct SingularPath {
  std::size_t length = 0;
  std::vector<Vertex> path;  // length+1 entries; first == last for a closed path
};

// Longest walk v0..vk with distinct internal vertices, all of Type I, and
// endpoints distinct from the internal ones. The endpoints may coincide.
SingularPath longest_singular_path(const EdgeColoredGraph& g);

bool is_rainbow(const EdgeColoredGraph& g, const Cycle& c);
// Exactly one repeated color, on the two cycle edges at `at`.
bool is_almost_rainbow_at(const EdgeColoredGraph& g, const Cycle& c, Vertex at);

// "u v label" lines, optionally preceded by "n <count>". Labels that are all
// non-negative integers are used as color ids; otherwise labels get ids in
// order of first appearance.
EdgeColoredGraph parse_colored_edge_list(std::string_view text);
std::string serialize_colored_edge_list(const EdgeColoredGraph& g);

}  // namespace cdc
