#include "cdc/line_graph.hpp"

#include <set>

#include "cdc/error.hpp"

namespace cdc {

ColoredLineGraph build_line_graph(const Graph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<Vertex>(v)) != 3)
      throw PreconditionError("line graph needs a cubic graph: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(static_cast<Vertex>(v))));
  ColoredLineGraph out;
  out.base = g;
  out.edge_of_vertex = g.edges();
  std::vector<ColoredEdge> ledges;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Vertex x = static_cast<Vertex>(v);
    auto nb = g.neighbors(x);
    out.vertex_of_color.push_back(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex a = static_cast<Vertex>(*g.edge_index(x, nb[i]));
        Vertex b = static_cast<Vertex>(*g.edge_index(x, nb[j]));
        ledges.push_back({Edge(a, b), x});
      }
  }
  out.lg = EdgeColoredGraph(g.edge_count(), ledges);
  return out;
}

Cycle lift_rainbow_cycle(const ColoredLineGraph& lg, const Cycle& c) {
  if (!is_cycle_of(lg.lg.graph(), c)) throw GraphError("not a cycle of the line graph: " + to_string(c));
  std::vector<Vertex> seq;
  std::set<Color> seen;
  const auto& vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Color col = lg.lg.color(vs[i], vs[(i + 1) % vs.size()]);
    if (!seen.insert(col).second) throw GraphError("cycle is not rainbow: color " + std::to_string(col) + " repeats");
    seq.push_back(lg.vertex_of_color.at(col));
  }
  Cycle out = Cycle::from_vertices(seq);
  if (!is_cycle_of(lg.base, out)) throw GraphError("lifted sequence is not a base cycle");
  return out;
}

Cycle project_cycle(const ColoredLineGraph& lg, const Cycle& c) {
  if (!is_cycle_of(lg.base, c)) throw GraphError("not a cycle of the base graph: " + to_string(c));
  std::vector<Vertex> seq;
  for (const Edge& e : c.edges()) seq.push_back(static_cast<Vertex>(*lg.base.edge_index(e.u, e.v)));
  return Cycle::from_vertices(seq);
}

CycleDoubleCover cover_from_decomposition(const ColoredLineGraph& lg, const std::vector<Cycle>& cycles) {
  std::vector<int> used(lg.lg.edge_count(), 0);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!is_rainbow(lg.lg, cycles[i]))
      throw GraphError("decomposition member " + std::to_string(i) + " is not a rainbow cycle: " + to_string(cycles[i]));
    for (const Edge& e : cycles[i].edges()) {
      std::size_t idx = *lg.lg.graph().edge_index(e.u, e.v);
      if (used[idx]++ > 0) throw GraphError("not a partition: edge " + to_string(e) + " used twice");
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i] == 0) throw GraphError("not a partition: edge " + to_string(lg.lg.graph().edges()[i]) + " uncovered");
  CycleDoubleCover cover;
  for (const Cycle& c : cycles) cover.cycles.push_back(lift_rainbow_cycle(lg, c));
  return cover;
}

}  // namespace cdc
