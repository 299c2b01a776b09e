#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cdc/decomposer.hpp"
#include "cdc/graph.hpp"
#include "cdc/oracle.hpp"
#include "cdc/rng.hpp"

namespace cdc::testing {

inline std::string data_path(const std::string& name) { return std::string(CDC_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph k33() {
  return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5-7-9-6-8.
inline Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

// Two K4-minus-an-edge pieces joined by the bridge 4-5.
inline Graph bridged() {
  return Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 7},
                    {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
}

inline Graph random_cubic(std::size_t n, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.vertex_count = n;
  cfg.seed = seed;
  return random_cubic_bridgeless(cfg);
}

// Good colored graphs: L(G) with a seeded prefix of a rainbow decomposition
// removed.
inline EdgeColoredGraph random_good(Rng& rng, std::size_t n) {
  const ColoredLineGraph lg = build_line_graph(random_cubic(n, rng.next()));
  const DecompositionTrace t = decompose(lg.lg);
  EdgeColoredGraph g = lg.lg;
  const std::size_t k = static_cast<std::size_t>(rng.below(t.cycles.size()));
  for (std::size_t i = 0; i < k; ++i) g = remove_cycle(g, t.cycles[i]);
  return g;
}

// Removes a seeded cycle that repeats one color at a single vertex, which
// leaves that vertex with one color. May return a graph that is not
// almost-good; callers filter with an oracle.
inline std::optional<EdgeColoredGraph> random_almost_good_candidate(Rng& rng, const EdgeColoredGraph& g) {
  std::vector<Cycle> pool;
  for (const Cycle& c : enumerate_cycles(g.graph(), 8)) {
    for (Vertex v : c.vertices())
      if (is_almost_rainbow_at(g, c, v)) {
        pool.push_back(c);
        break;
      }
  }
  if (pool.empty()) return std::nullopt;
  return remove_cycle(g, pool[static_cast<std::size_t>(rng.below(pool.size()))]);
}

// One random local change: recolor, delete or add an edge, or swap two
// colors.
inline EdgeColoredGraph mutate(Rng& rng, const EdgeColoredGraph& g) {
  std::vector<ColoredEdge> es = g.colored_edges();
  const std::size_t n = g.vertex_count();
  Color max_color = 0;
  for (const auto& e : es) max_color = std::max(max_color, e.color);
  switch (rng.below(4)) {
    case 0:
      if (!es.empty()) es[rng.below(es.size())].color = static_cast<Color>(rng.below(static_cast<std::uint64_t>(max_color) + 2));
      break;
    case 1:
      if (!es.empty()) es.erase(es.begin() + static_cast<long>(rng.below(es.size())));
      break;
    case 2: {
      const Vertex a = static_cast<Vertex>(rng.below(n)), b = static_cast<Vertex>(rng.below(n));
      if (a != b && !g.has_edge(a, b)) es.push_back({Edge(a, b), static_cast<Color>(rng.below(static_cast<std::uint64_t>(max_color) + 2))});
      break;
    }
    default:
      if (es.size() >= 2) std::swap(es[rng.below(es.size())].color, es[rng.below(es.size())].color);
  }
  return EdgeColoredGraph(n, es);
}

}  // namespace cdc::testing
