#include "cdc/colored_graph.hpp"

#include <charconv>
#include <numeric>
#include <set>
#include <unordered_map>

namespace cdc {

EdgeColoredGraph::EdgeColoredGraph(Graph graph, std::vector<Color> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  if (colors_.size() != graph_.edge_count()) throw GraphError("coloring does not match edge count");
}

EdgeColoredGraph::EdgeColoredGraph(std::size_t vertex_count, std::span<const ColoredEdge> edges) {
  std::vector<ColoredEdge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Edge> plain;
  plain.reserve(sorted.size());
  for (const auto& ce : sorted) plain.push_back(ce.edge);
  graph_ = Graph(vertex_count, plain);
  colors_.reserve(sorted.size());
  for (const auto& ce : sorted) colors_.push_back(ce.color);
}

Color EdgeColoredGraph::color(Vertex a, Vertex b) const {
  auto idx = graph_.edge_index(a, b);
  if (!idx) throw GraphError("no edge " + to_string(Edge(a, b)));
  return colors_[*idx];
}

std::vector<ColoredEdge> EdgeColoredGraph::colored_edges() const {
  std::vector<ColoredEdge> out;
  out.reserve(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i) out.push_back({graph_.edges()[i], colors_[i]});
  return out;
}

std::vector<Color> EdgeColoredGraph::incident_colors(Vertex v) const {
  std::vector<Color> cs;
  for (Vertex w : neighbors(v)) cs.push_back(color(v, w));
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

EdgeColoredGraph remove_edges(const EdgeColoredGraph& g, std::span<const Edge> edges) {
  std::vector<Edge> drop(edges.begin(), edges.end());
  std::sort(drop.begin(), drop.end());
  for (const Edge& e : drop)
    if (!g.has_edge(e.u, e.v)) throw GraphError("cannot remove missing edge " + to_string(e));
  std::vector<ColoredEdge> keep;
  for (const auto& ce : g.colored_edges())
    if (!std::binary_search(drop.begin(), drop.end(), ce.edge)) keep.push_back(ce);
  return EdgeColoredGraph(g.vertex_count(), keep);
}

EdgeColoredGraph remove_cycle(const EdgeColoredGraph& g, const Cycle& c) {
  auto es = c.edges();
  return remove_edges(g, es);
}

std::map<Color, ColorClass> color_classes(const EdgeColoredGraph& g) {
  std::map<Color, ColorClass> out;
  for (const auto& ce : g.colored_edges()) {
    auto& cls = out[ce.color];
    cls.edges.push_back(ce.edge);
    cls.vertices.push_back(ce.edge.u);
    cls.vertices.push_back(ce.edge.v);
  }
  for (auto& [c, cls] : out) {
    std::sort(cls.vertices.begin(), cls.vertices.end());
    cls.vertices.erase(std::unique(cls.vertices.begin(), cls.vertices.end()), cls.vertices.end());
  }
  return out;
}

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::TypeI: return "TypeI";
    case VertexClass::TypeII: return "TypeII";
    case VertexClass::Bad: return "Bad";
    case VertexClass::Isolated: return "Isolated";
  }
  return "?";
}

VertexClass classify_vertex(const EdgeColoredGraph& g, Vertex v) {
  const std::size_t d = g.degree(v);
  if (d == 0) return VertexClass::Isolated;
  std::vector<Color> cs;
  for (Vertex w : g.neighbors(v)) cs.push_back(g.color(v, w));
  std::sort(cs.begin(), cs.end());
  const bool pairs = d == 4 && cs[0] == cs[1] && cs[2] == cs[3];
  const std::size_t cd = static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
  if (d == 2 && cd == 2) return VertexClass::TypeI;
  if (d == 2 && cd == 1) return VertexClass::Bad;
  if (pairs && cd == 2) return VertexClass::TypeII;
  throw NotClassifiable(v, d, cd);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Good: return "Good";
    case Verdict::AlmostGood: return "AlmostGood";
    case Verdict::NotGood: return "NotGood";
  }
  return "?";
}

namespace {

// Component label (within G - v) of every neighbor of v.
std::vector<int> neighbor_components(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::vector<int> label(nb.size(), -1);
  std::vector<int> mark(g.vertex_count(), -1);
  mark[v] = -2;
  int next = 0;
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (mark[nb[i]] >= 0) {
      label[i] = mark[nb[i]];
      continue;
    }
    mark[nb[i]] = next;
    stack.push_back(nb[i]);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (mark[w] == -1) {
          mark[w] = next;
          stack.push_back(w);
        }
    }
    label[i] = next++;
  }
  return label;
}

bool is_type_x(const EdgeColoredGraph& g, Vertex v) {
  if (g.degree(v) != 4) return false;
  auto label = neighbor_components(g.graph(), v);
  const int groups = *std::max_element(label.begin(), label.end()) + 1;
  if (groups < 2) return false;
  auto nb = g.neighbors(v);
  for (int mask = 1; mask + 1 < (1 << groups); ++mask) {
    std::vector<Color> in, out;
    for (std::size_t i = 0; i < nb.size(); ++i)
      ((mask >> label[i]) & 1 ? in : out).push_back(g.color(v, nb[i]));
    if (in.size() == 2 && out.size() == 2 && in[0] == in[1] && out[0] == out[1]) return true;
  }
  return false;
}

}  // namespace

GoodnessReport check_goodness(const EdgeColoredGraph& g) {
  GoodnessReport r;
  const std::size_t n = g.vertex_count();
  std::vector<Violation> c4;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = static_cast<Vertex>(i);
    const std::size_t d = g.degree(v);
    if (d % 2 != 0) r.violations.push_back({1, {v}, std::nullopt, "odd degree " + std::to_string(d)});
    if (d > 4) r.violations.push_back({2, {v}, std::nullopt, "degree " + std::to_string(d)});
  }
  for (const Edge& e : g.graph().edges()) {
    for (Vertex w : g.neighbors(e.v)) {
      if (w <= e.v || !g.has_edge(e.u, w)) continue;
      Color a = g.color(e.u, e.v), b = g.color(e.v, w), c = g.color(e.u, w);
      bool rainbow = a != b && b != c && a != c;
      bool mono = a == b && b == c;
      if (!rainbow && !mono)
        r.violations.push_back({3, {e.u, e.v, w}, std::nullopt, "triangle neither rainbow nor monochromatic"});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = static_cast<Vertex>(i);
    if (g.degree(v) == 0) continue;
    const std::size_t cd = g.color_degree(v);
    if (cd != 2) c4.push_back({4, {v}, std::nullopt, "color degree " + std::to_string(cd)});
  }
  for (const auto& [color, cls] : color_classes(g))
    if (cls.vertices.size() > 3)
      r.violations.push_back({5, cls.vertices, color, "color class spans " + std::to_string(cls.vertices.size()) + " vertices"});
  for (std::size_t i = 0; i < n; ++i)
    if (is_type_x(g, static_cast<Vertex>(i)))
      r.violations.push_back({6, {static_cast<Vertex>(i)}, std::nullopt, "cut vertex of Type X"});

  const bool others = !r.violations.empty();
  r.violations.insert(r.violations.end(), c4.begin(), c4.end());
  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.condition < b.condition; });
  if (others) {
    r.verdict = Verdict::NotGood;
  } else if (c4.empty()) {
    r.verdict = Verdict::Good;
  } else if (c4.size() == 1 && g.degree(c4[0].vertices[0]) == 2 && g.color_degree(c4[0].vertices[0]) == 1) {
    r.verdict = Verdict::AlmostGood;
    r.bad_vertex = c4[0].vertices[0];
  } else {
    r.verdict = Verdict::NotGood;
  }
  return r;
}

bool is_good_or_almost_good(const GoodnessReport& r) { return r.verdict != Verdict::NotGood; }

std::vector<Vertex> find_type_x_vertices(const EdgeColoredGraph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.degree(static_cast<Vertex>(i)) % 2 != 0)
      throw PreconditionError("find_type_x_vertices: vertex " + std::to_string(i) + " has odd degree");
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (is_type_x(g, static_cast<Vertex>(i))) out.push_back(static_cast<Vertex>(i));
  return out;
}

Pseudoblocks pseudoblocks(const EdgeColoredGraph& g, Vertex v) {
  if (!g.graph().contains(v) || g.degree(v) == 0) throw GraphError("vertex " + std::to_string(v) + " is not a cut vertex");
  auto label = neighbor_components(g.graph(), v);
  if (*std::max_element(label.begin(), label.end()) < 1)
    throw GraphError("vertex " + std::to_string(v) + " is not a cut vertex");
  // neighbors are sorted, so the first one carries the lowest-numbered edge at v
  const Vertex seed = g.neighbors(v)[0];
  std::vector<char> side(g.vertex_count(), 0);
  side[v] = 2;
  std::vector<Vertex> stack{seed};
  side[seed] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (side[w] == 0) {
        side[w] = 1;
        stack.push_back(w);
      }
  }
  Pseudoblocks pb;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (side[i] != 0) pb.vertices1.push_back(static_cast<Vertex>(i));
    if (side[i] != 1) pb.vertices2.push_back(static_cast<Vertex>(i));
  }
  for (const Edge& e : g.graph().edges())
    (side[e.u] == 1 || side[e.v] == 1 ? pb.edges1 : pb.edges2).push_back(e);
  return pb;
}

XBlockDecomposition x_block_decomposition(const EdgeColoredGraph& g) {
  const BlockDecomposition bd = block_decomposition(g.graph());
  const std::vector<Vertex> type_x = find_type_x_vertices(g);
  const std::size_t nb = bd.blocks.size();
  std::vector<std::size_t> parent(nb);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<Vertex, std::vector<std::size_t>> blocks_at;
  for (const auto& [b, c] : bd.block_cut_tree) blocks_at[c].push_back(b);
  for (const auto& [c, bs] : blocks_at) {
    if (std::binary_search(type_x.begin(), type_x.end(), c)) continue;
    for (std::size_t i = 1; i < bs.size(); ++i) {
      std::size_t a = find(bs[0]), b = find(bs[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  XBlockDecomposition xd;
  std::map<std::size_t, std::size_t> index_of_root;
  for (std::size_t b = 0; b < nb; ++b) {
    std::size_t root = find(b);
    auto [it, inserted] = index_of_root.try_emplace(root, xd.x_blocks.size());
    if (inserted) {
      xd.x_blocks.emplace_back();
      xd.x_block_edges.emplace_back();
    }
    auto& vs = xd.x_blocks[it->second];
    vs.insert(vs.end(), bd.block_vertices[b].begin(), bd.block_vertices[b].end());
    auto& es = xd.x_block_edges[it->second];
    es.insert(es.end(), bd.blocks[b].begin(), bd.blocks[b].end());
  }
  for (auto& vs : xd.x_blocks) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
  for (auto& es : xd.x_block_edges) std::sort(es.begin(), es.end());
  for (Vertex c : type_x) {
    auto it = blocks_at.find(c);
    if (it == blocks_at.end()) continue;
    xd.x_cut_vertices.push_back(c);
    std::set<std::size_t> ids;
    for (std::size_t b : it->second) ids.insert(index_of_root.at(find(b)));
    std::vector<std::size_t> v(ids.begin(), ids.end());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) xd.forest.push_back({v[i], v[j], c});
  }
  std::sort(xd.forest.begin(), xd.forest.end());
  return xd;
}

std::optional<Cycle> find_rainbow_triangle(const EdgeColoredGraph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex u = static_cast<Vertex>(i);
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !g.has_edge(u, w)) continue;
        Color a = g.color(u, v), b = g.color(v, w), c = g.color(u, w);
        if (a != b && b != c && a != c) return Cycle::from_vertices({u, v, w});
      }
    }
  }
  return std::nullopt;
}

SingularPath longest_singular_path(const EdgeColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> type1(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = static_cast<Vertex>(i);
    type1[i] = g.degree(v) == 2 && g.color_degree(v) == 2;
  }
  SingularPath best;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v0 = static_cast<Vertex>(i);
    for (Vertex v1 : g.neighbors(v0)) {
      std::vector<Vertex> path{v0, v1};
      while (path.back() != v0 && type1[path.back()]) {
        auto nb = g.neighbors(path.back());
        Vertex prev = path[path.size() - 2];
        path.push_back(nb[0] == prev ? nb[1] : nb[0]);
      }
      const std::size_t len = path.size() - 1;
      if (len > best.length || (len == best.length && path < best.path)) {
        best.length = len;
        best.path = std::move(path);
      }
    }
  }
  return best;
}

bool is_rainbow(const EdgeColoredGraph& g, const Cycle& c) {
  std::vector<Color> cs;
  for (const Edge& e : c.edges()) {
    if (!g.has_edge(e.u, e.v)) return false;
    cs.push_back(g.color(e.u, e.v));
  }
  std::sort(cs.begin(), cs.end());
  return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

bool is_almost_rainbow_at(const EdgeColoredGraph& g, const Cycle& c, Vertex at) {
  auto p = c.position(at);
  if (!p || !is_cycle_of(g.graph(), c)) return false;
  const Vertex prev = c.at(*p + c.length() - 1), next = c.at(*p + 1);
  const Color rep = g.color(at, prev);
  if (g.color(at, next) != rep) return false;
  std::vector<Color> cs;
  for (const Edge& e : c.edges()) cs.push_back(g.color(e.u, e.v));
  std::sort(cs.begin(), cs.end());
  if (std::count(cs.begin(), cs.end(), rep) != 2) return false;
  cs.erase(std::find(cs.begin(), cs.end(), rep));
  return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> as_nonneg(std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0 || v > 1'000'000'000) return std::nullopt;
  return v;
}

}  // namespace

EdgeColoredGraph parse_colored_edge_list(std::string_view text) {
  struct Row {
    long long u, v;
    std::string label;
    std::size_t line;
  };
  std::vector<Row> rows;
  long long declared = -1, max_id = -1;
  std::size_t line_no = 0, start = 0;
  bool seen = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tok = split_ws(text.substr(start, end - start));
    start = end + 1;
    if (tok.empty() || tok[0].front() == '#') continue;
    if (!seen && tok.size() == 2 && tok[0] == "n") {
      auto c = as_nonneg(tok[1]);
      if (!c) throw ParseError("bad vertex count", line_no);
      declared = *c;
      seen = true;
      continue;
    }
    seen = true;
    if (tok.size() != 3) throw ParseError("expected 'u v color'", line_no);
    auto a = as_nonneg(tok[0]), b = as_nonneg(tok[1]);
    if (!a || !b) throw ParseError("expected non-negative vertex ids", line_no);
    if (*a == *b) throw ParseError("self-loop at vertex " + std::to_string(*a), line_no);
    rows.push_back({*a, *b, std::string(tok[2]), line_no});
    max_id = std::max({max_id, *a, *b});
  }
  if (declared >= 0 && max_id >= declared)
    throw ParseError("vertex id " + std::to_string(max_id) + " exceeds declared count", line_no);

  const bool numeric = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return as_nonneg(r.label).has_value(); });
  std::unordered_map<std::string, Color> ids;
  std::vector<ColoredEdge> edges;
  std::set<Edge> seen_edges;
  for (const Row& r : rows) {
    Edge e(static_cast<Vertex>(r.u), static_cast<Vertex>(r.v));
    if (!seen_edges.insert(e).second) throw ParseError("duplicate edge " + to_string(e), r.line);
    Color c = numeric ? static_cast<Color>(*as_nonneg(r.label))
                      : ids.try_emplace(r.label, static_cast<Color>(ids.size())).first->second;
    edges.push_back({e, c});
  }
  const std::size_t n = declared >= 0 ? static_cast<std::size_t>(declared) : static_cast<std::size_t>(max_id + 1);
  return EdgeColoredGraph(n, edges);
}

std::string serialize_colored_edge_list(const EdgeColoredGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& ce : g.colored_edges())
    out += std::to_string(ce.edge.u) + " " + std::to_string(ce.edge.v) + " " + std::to_string(ce.color) + "\n";
  return out;
}

}  // namespace cdc
