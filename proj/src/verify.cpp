#include "cdc/verify.hpp"

#include <map>

namespace cdc {

namespace {

using EdgeKey = std::pair<Vertex, Vertex>;

EdgeKey key(Vertex a, Vertex b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

// Returns an empty string when `vs` is a simple closed walk over `edges`.
std::string cycle_problem(const std::map<EdgeKey, Color>& edges, const std::vector<Vertex>& vs) {
  if (vs.size() < 3) return "fewer than 3 vertices";
  std::map<Vertex, int> seen;
  for (Vertex v : vs)
    if (++seen[v] > 1) return "vertex " + std::to_string(v) + " repeats";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    if (!edges.count(key(a, b))) return "missing edge " + std::to_string(a) + "-" + std::to_string(b);
  }
  return {};
}

std::map<EdgeKey, Color> edge_table(const std::vector<ColoredEdge>& es) {
  std::map<EdgeKey, Color> t;
  for (const auto& ce : es) t[key(ce.edge.u, ce.edge.v)] = ce.color;
  return t;
}

}  // namespace

CdcVerdict verify_cdc(const Graph& g, const CycleDoubleCover& cover) {
  std::map<EdgeKey, Color> edges;
  for (const Edge& e : g.edges()) edges[key(e.u, e.v)] = 0;
  std::map<EdgeKey, int> count;
  for (const auto& [k, _] : edges) count[k] = 0;

  CdcVerdict out;
  for (std::size_t i = 0; i < cover.cycles.size(); ++i) {
    const auto& vs = cover.cycles[i].vertices();
    std::string problem = cycle_problem(edges, vs);
    if (!problem.empty()) {
      out.witnesses.push_back({"invalid_cycle", vs, static_cast<int>(i), 0, problem});
      continue;
    }
    for (std::size_t j = 0; j < vs.size(); ++j) ++count[key(vs[j], vs[(j + 1) % vs.size()])];
  }
  for (const auto& [k, c] : count) {
    out.usage.push_back({Edge(k.first, k.second), c});
    if (c != 2) out.witnesses.push_back({"edge_count", {k.first, k.second}, -1, c, "edge used " + std::to_string(c) + " times"});
  }
  out.accepted = out.witnesses.empty();
  return out;
}

namespace {

bool rainbow_walk(const std::map<EdgeKey, Color>& edges, const std::vector<Vertex>& vs) {
  std::map<Color, int> seen;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (++seen[edges.at(key(vs[i], vs[(i + 1) % vs.size()]))] > 1) return false;
  return true;
}

bool almost_rainbow_walk(const std::map<EdgeKey, Color>& edges, const std::vector<Vertex>& vs, int at) {
  const std::size_t k = vs.size();
  std::map<Color, int> seen;
  for (std::size_t i = 0; i < k; ++i) ++seen[edges.at(key(vs[i], vs[(i + 1) % k]))];
  for (std::size_t i = 0; i < k; ++i) {
    if (at >= 0 && vs[i] != at) continue;
    Color in = edges.at(key(vs[(i + k - 1) % k], vs[i]));
    Color out = edges.at(key(vs[i], vs[(i + 1) % k]));
    if (in != out) continue;
    bool ok = true;
    for (const auto& [c, n] : seen)
      if (n != (c == in ? 2 : 1)) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

DecompositionVerdict verify_rainbow_decomposition(const EdgeColoredGraph& g, const std::vector<Cycle>& cycles,
                                                  DecompositionMode mode, int bad_vertex) {
  const auto edges = edge_table(g.colored_edges());
  std::map<EdgeKey, int> used;
  DecompositionVerdict out;
  int almost = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& vs = cycles[i].vertices();
    std::string problem = cycle_problem(edges, vs);
    if (!problem.empty()) {
      out.witnesses.push_back({"invalid_cycle", vs, static_cast<int>(i), 0, problem});
      continue;
    }
    for (std::size_t j = 0; j < vs.size(); ++j) ++used[key(vs[j], vs[(j + 1) % vs.size()])];
    if (rainbow_walk(edges, vs)) continue;
    if (mode == DecompositionMode::AlmostGood && almost_rainbow_walk(edges, vs, bad_vertex)) {
      if (++almost > 1) out.witnesses.push_back({"coloring", vs, static_cast<int>(i), 0, "second almost-rainbow cycle"});
      continue;
    }
    out.witnesses.push_back({"coloring", vs, static_cast<int>(i), 0, "cycle is not rainbow"});
  }
  for (const auto& [k, _] : edges) {
    auto it = used.find(k);
    int c = it == used.end() ? 0 : it->second;
    if (c != 1) out.witnesses.push_back({"partition", {k.first, k.second}, -1, c, "edge used " + std::to_string(c) + " times"});
  }
  out.accepted = out.witnesses.empty();
  return out;
}

bool verify_is_almost_rainbow(const EdgeColoredGraph& g, const Cycle& c) {
  const auto edges = edge_table(g.colored_edges());
  if (!cycle_problem(edges, c.vertices()).empty()) return false;
  return almost_rainbow_walk(edges, c.vertices(), -1);
}

}  // namespace cdc
