#include "cdc/graph.hpp"

#include <map>
#include <set>

#include "cdc/error.hpp"

namespace cdc {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(std::size_t vertex_count) : adj_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adj_(vertex_count) {
  edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || static_cast<std::size_t>(e.v) >= vertex_count)
      throw GraphError("edge " + to_string(e) + " out of range for " +
                       std::to_string(vertex_count) + " vertices");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw GraphError("duplicate edge " + to_string(*dup));
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& na = adj_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::non_isolated_count() const {
  return static_cast<std::size_t>(
      std::count_if(adj_.begin(), adj_.end(), [](const auto& a) { return !a.empty(); }));
}

Cycle Cycle::from_vertices(std::vector<Vertex> seq) {
  if (seq.size() < 3) throw GraphError("cycle needs at least 3 vertices");
  {
    std::vector<Vertex> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw GraphError("cycle repeats vertex " + std::to_string(*dup));
  }
  auto mn = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), mn, seq.end());
  if (seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
  Cycle c;
  c.vs_ = std::move(seq);
  return c;
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  out.reserve(vs_.size());
  for (std::size_t i = 0; i < vs_.size(); ++i) out.emplace_back(vs_[i], vs_[(i + 1) % vs_.size()]);
  return out;
}

bool Cycle::contains(Vertex v) const { return position(v).has_value(); }

std::optional<std::size_t> Cycle::position(Vertex v) const {
  auto it = std::find(vs_.begin(), vs_.end(), v);
  if (it == vs_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vs_.begin());
}

std::vector<Vertex> Cycle::walk_from(Vertex start, Vertex next) const {
  auto p = position(start);
  if (!p) throw GraphError("vertex " + std::to_string(start) + " not on cycle");
  const std::size_t k = vs_.size();
  std::vector<Vertex> out;
  out.reserve(k);
  if (at(*p + 1) == next) {
    for (std::size_t i = 0; i < k; ++i) out.push_back(at(*p + i));
  } else if (at(*p + k - 1) == next) {
    for (std::size_t i = 0; i < k; ++i) out.push_back(at(*p + k - i));
  } else {
    throw GraphError("vertices " + std::to_string(start) + "," + std::to_string(next) +
                     " not consecutive on cycle");
  }
  return out;
}

std::string to_string(const Cycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.vertices()[i]);
  }
  return s + ")";
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
  if (c.length() < 3) return false;
  for (const Edge& e : c.edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

bool is_cubic(const Graph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<Vertex>(v)) != 3) return false;
  return true;
}

std::vector<int> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

namespace {

struct DfsFrame {
  Vertex v;
  Vertex parent;
  std::size_t next = 0;
};

}  // namespace

std::vector<Edge> find_bridges(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  std::vector<Edge> bridges;
  std::vector<DfsFrame> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({static_cast<Vertex>(s), -1});
    while (!stack.empty()) {
      DfsFrame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v, p = f.parent;
      stack.pop_back();
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) bridges.emplace_back(p, v);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  std::vector<std::vector<Edge>> blocks;
  std::vector<Edge> edge_stack;
  std::vector<DfsFrame> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] != -1 || g.degree(static_cast<Vertex>(s)) == 0) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({static_cast<Vertex>(s), -1});
    while (!stack.empty()) {
      DfsFrame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v, p = f.parent;
      stack.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        const Edge tree_edge(p, v);
        std::vector<Edge> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());

  BlockDecomposition bd;
  bd.blocks = std::move(blocks);
  std::map<Vertex, std::vector<std::size_t>> blocks_at;
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    std::set<Vertex> vs;
    for (const Edge& e : bd.blocks[b]) {
      vs.insert(e.u);
      vs.insert(e.v);
    }
    bd.block_vertices.emplace_back(vs.begin(), vs.end());
    for (Vertex v : vs) blocks_at[v].push_back(b);
  }
  for (const auto& [v, bs] : blocks_at) {
    if (bs.size() < 2) continue;
    bd.cut_vertices.push_back(v);
    for (std::size_t i = 0; i < bs.size(); ++i) {
      bd.block_cut_tree.emplace_back(bs[i], v);
      for (std::size_t j = i + 1; j < bs.size(); ++j) bd.block_adjacency.emplace_back(bs[i], bs[j]);
    }
  }
  std::sort(bd.block_adjacency.begin(), bd.block_adjacency.end());
  bd.block_adjacency.erase(std::unique(bd.block_adjacency.begin(), bd.block_adjacency.end()),
                           bd.block_adjacency.end());
  return bd;
}

Contraction contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("edge " + to_string(e) + " not in graph");
  for (Vertex w : g.neighbors(e.u))
    if (w != e.v && g.has_edge(w, e.v)) throw ContractionError(e.u, e.v, w);

  const std::size_t n = g.vertex_count();
  Contraction out;
  out.vertex_map.assign(n, -1);
  Vertex next = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (static_cast<Vertex>(v) != e.u && static_cast<Vertex>(v) != e.v)
      out.vertex_map[v] = next++;
  out.merged = next;
  out.vertex_map[e.u] = out.vertex_map[e.v] = out.merged;

  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f == e) continue;
    edges.emplace_back(out.vertex_map[f.u], out.vertex_map[f.v]);
  }
  out.graph = Graph(n - 1, edges);
  return out;
}

Subdivision subdivide_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("edge " + to_string(e) + " not in graph");
  const Vertex x = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (f != e) edges.push_back(f);
  edges.emplace_back(e.u, x);
  edges.emplace_back(x, e.v);
  return {Graph(g.vertex_count() + 1, edges), x};
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> drop(edges.begin(), edges.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  return Graph(g.vertex_count(), keep);
}

}  // namespace cdc
