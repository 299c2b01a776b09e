#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cdc {

using Vertex = int;
using Color = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  // Throws GraphError on self-loops, duplicates or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adj_.size(); }
  bool has_edge(Vertex a, Vertex b) const;
  // Position of {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  std::size_t non_isolated_count() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

// A simple cycle stored in canonical form: minimum vertex first, then the
// smaller of its two cycle-neighbors.
class Cycle {
 public:
  Cycle() = default;
  // Throws GraphError if fewer than 3 vertices or a vertex repeats.
  static Cycle from_vertices(std::vector<Vertex> seq);

  const std::vector<Vertex>& vertices() const { return vs_; }
  std::size_t length() const { return vs_.size(); }
  Vertex at(std::size_t i) const { return vs_[i % vs_.size()]; }
  // Edges in cyclic order v0v1, v1v2, ..., v(k-1)v0.
  std::vector<Edge> edges() const;
  bool contains(Vertex v) const;
  std::optional<std::size_t> position(Vertex v) const;
  // Vertex sequence starting at `start` and continuing towards `next`.
  std::vector<Vertex> walk_from(Vertex start, Vertex next) const;

  auto operator<=>(const Cycle&) const = default;

 private:
  std::vector<Vertex> vs_;
};

std::string to_string(const Cycle& c);
bool is_cycle_of(const Graph& g, const Cycle& c);

bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);
// Component id per vertex; isolated vertices get their own component.
std::vector<int> connected_components(const Graph& g);
std::vector<Edge> find_bridges(const Graph& g);

struct BlockDecomposition {
  // Each block as a sorted edge list; blocks ordered by their first edge.
  std::vector<std::vector<Edge>> blocks;
  std::vector<std::vector<Vertex>> block_vertices;
  std::vector<Vertex> cut_vertices;
  // Pairs of blocks sharing a cut vertex.
  std::vector<std::pair<std::size_t, std::size_t>> block_adjacency;
  // Block/cut-vertex incidences; a forest for any input.
  std::vector<std::pair<std::size_t, Vertex>> block_cut_tree;
};

BlockDecomposition block_decomposition(const Graph& g);

struct Contraction {
  Graph graph;
  std::vector<Vertex> vertex_map;  // old id -> new id
  Vertex merged = -1;
};

// The merged vertex receives id n-2; other vertices keep their relative order.
Contraction contract_edge(const Graph& g, Edge e);

struct Subdivision {
  Graph graph;
  Vertex new_vertex = -1;
};

Subdivision subdivide_edge(const Graph& g, Edge e);

Graph remove_edges(const Graph& g, std::span<const Edge> edges);

}  // namespace cdc
