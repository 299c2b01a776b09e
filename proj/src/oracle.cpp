#include "cdc/oracle.hpp"

#include <functional>
#include <map>
#include <set>

#include "cdc/error.hpp"
#include "cdc/rng.hpp"

namespace cdc {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

struct OutOfBudget {};

class BudgetClock {
 public:
  explicit BudgetClock(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}
  void tick() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) throw OutOfBudget{};
    if (budget_.max_time.count() > 0 && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.max_time)
      throw OutOfBudget{};
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<std::size_t> max_len) {
  const std::size_t n = g.vertex_count();
  const std::size_t cap = max_len.value_or(n);
  std::vector<Cycle> out;
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::function<void(Vertex)> extend = [&](Vertex s) {
    const Vertex cur = path.back();
    for (Vertex w : g.neighbors(cur)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(Cycle::from_vertices(path));
      if (w <= s || on_path[w] || path.size() >= cap) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(s);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {static_cast<Vertex>(s)};
    on_path[s] = 1;
    extend(static_cast<Vertex>(s));
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CdcSearch brute_force_cdc(const Graph& g, const Budget& budget, BranchRule rule) {
  CdcSearch result;
  const std::size_t m = g.edge_count();
  if (m == 0) {
    result.status = SearchStatus::Found;
    result.cover = CycleDoubleCover{};
    return result;
  }
  const std::vector<Cycle> cycles = enumerate_cycles(g);
  std::vector<std::vector<std::size_t>> edges_of(cycles.size());
  std::vector<std::vector<std::size_t>> cycles_of(m);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (const Edge& e : cycles[c].edges()) {
      std::size_t idx = *g.edge_index(e.u, e.v);
      edges_of[c].push_back(idx);
      cycles_of[idx].push_back(c);
    }

  std::vector<int> demand(m, 2);
  std::vector<std::size_t> floor(m, 0);
  std::vector<std::size_t> chosen;
  BudgetClock clock(budget);

  auto usable = [&](std::size_t c) {
    for (std::size_t e : edges_of[c])
      if (demand[e] == 0) return false;
    return true;
  };

  std::function<bool()> search = [&]() -> bool {
    clock.tick();
    std::size_t branch = m;
    if (rule == BranchRule::LowestIndex) {
      for (std::size_t e = 0; e < m; ++e)
        if (demand[e] > 0) {
          branch = e;
          break;
        }
    } else {
      std::size_t best = SIZE_MAX;
      for (std::size_t e = 0; e < m; ++e) {
        if (demand[e] == 0) continue;
        std::size_t avail = 0;
        for (std::size_t c : cycles_of[e])
          if (c >= floor[e] && usable(c)) ++avail;
        if (avail < best) {
          best = avail;
          branch = e;
        }
        if (best == 0) break;
      }
    }
    if (branch == m) return true;
    for (std::size_t c : cycles_of[branch]) {
      if (c < floor[branch] || !usable(c)) continue;
      const std::size_t saved = floor[branch];
      floor[branch] = c;
      for (std::size_t e : edges_of[c]) --demand[e];
      chosen.push_back(c);
      if (search()) return true;
      chosen.pop_back();
      for (std::size_t e : edges_of[c]) ++demand[e];
      floor[branch] = saved;
    }
    return false;
  };

  try {
    if (search()) {
      result.status = SearchStatus::Found;
      CycleDoubleCover cover;
      for (std::size_t c : chosen) cover.cycles.push_back(cycles[c]);
      result.cover = std::move(cover);
    } else {
      result.status = SearchStatus::Absent;
    }
  } catch (const OutOfBudget&) {
    result.status = SearchStatus::Indeterminate;
  }
  result.nodes = clock.nodes();
  return result;
}

RainbowSearch brute_force_rainbow_decomposition(const EdgeColoredGraph& g, const Budget& budget) {
  RainbowSearch result;
  const Graph& G = g.graph();
  const std::size_t n = G.vertex_count(), m = G.edge_count();

  // Raw lookups, independent of the colored-graph helpers.
  std::map<std::pair<Vertex, Vertex>, Color> color_of;
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = G.edges()[i];
    color_of[{e.u, e.v}] = color_of[{e.v, e.u}] = g.colors()[i];
  }
  int bad = -1;
  for (std::size_t v = 0; v < n; ++v) {
    auto nb = G.neighbors(static_cast<Vertex>(v));
    if (nb.size() == 2 && color_of[{static_cast<Vertex>(v), nb[0]}] == color_of[{static_cast<Vertex>(v), nb[1]}]) {
      if (bad >= 0) {
        result.status = SearchStatus::Absent;
        return result;
      }
      bad = static_cast<int>(v);
    }
  }

  BudgetClock clock(budget);
  std::vector<Cycle> cand;
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::map<Color, int> count;
  int repeats = 0;

  auto acceptable = [&](const std::vector<Vertex>& vs) {
    std::map<Color, int> c;
    const std::size_t k = vs.size();
    for (std::size_t i = 0; i < k; ++i) ++c[color_of[{vs[i], vs[(i + 1) % k]}]];
    int twice = 0;
    Color rep = 0;
    for (const auto& [col, cnt] : c) {
      if (cnt > 2) return false;
      if (cnt == 2) {
        ++twice;
        rep = col;
      }
    }
    if (twice == 0) return true;
    if (twice > 1 || bad < 0) return false;
    for (std::size_t i = 0; i < k; ++i)
      if (vs[i] == bad)
        return color_of[{vs[(i + k - 1) % k], vs[i]}] == rep && color_of[{vs[i], vs[(i + 1) % k]}] == rep;
    return false;
  };

  std::function<void(Vertex)> extend = [&](Vertex s) {
    clock.tick();
    const Vertex cur = path.back();
    for (Vertex w : G.neighbors(cur)) {
      Color col = color_of[{cur, w}];
      if (w == s && path.size() >= 3 && path[1] < path.back() && acceptable(path)) cand.push_back(Cycle::from_vertices(path));
      if (w <= s || on_path[w]) continue;
      int& cnt = count[col];
      if (cnt >= 2 || (cnt == 1 && (bad < 0 || repeats > 0))) continue;
      if (cnt == 1) ++repeats;
      ++cnt;
      on_path[w] = 1;
      path.push_back(w);
      extend(s);
      path.pop_back();
      on_path[w] = 0;
      --count[col];
      if (count[col] == 1) --repeats;
    }
  };

  std::vector<std::vector<std::size_t>> edges_of, cycles_of(m);
  std::vector<char> covered(m, 0);
  std::vector<std::size_t> chosen;
  std::function<bool()> cover = [&]() -> bool {
    clock.tick();
    std::size_t e = 0;
    while (e < m && covered[e]) ++e;
    if (e == m) return true;
    for (std::size_t c : cycles_of[e]) {
      bool ok = true;
      for (std::size_t f : edges_of[c])
        if (covered[f]) ok = false;
      if (!ok) continue;
      for (std::size_t f : edges_of[c]) covered[f] = 1;
      chosen.push_back(c);
      if (cover()) return true;
      chosen.pop_back();
      for (std::size_t f : edges_of[c]) covered[f] = 0;
    }
    return false;
  };

  try {
    for (std::size_t s = 0; s < n; ++s) {
      path = {static_cast<Vertex>(s)};
      on_path[s] = 1;
      extend(static_cast<Vertex>(s));
      on_path[s] = 0;
    }
    std::sort(cand.begin(), cand.end());
    edges_of.resize(cand.size());
    for (std::size_t c = 0; c < cand.size(); ++c)
      for (const Edge& e : cand[c].edges()) {
        std::size_t idx = *G.edge_index(e.u, e.v);
        edges_of[c].push_back(idx);
        cycles_of[idx].push_back(c);
      }
    if (cover()) {
      result.status = SearchStatus::Found;
      for (std::size_t c : chosen) result.cycles.push_back(cand[c]);
      if (bad >= 0) {
        auto it = std::find_if(result.cycles.begin(), result.cycles.end(), [&](const Cycle& c) { return c.contains(bad); });
        std::rotate(result.cycles.begin(), it, it + 1);
      }
    } else {
      result.status = SearchStatus::Absent;
    }
  } catch (const OutOfBudget&) {
    result.status = SearchStatus::Indeterminate;
  }
  result.nodes = clock.nodes();
  return result;
}

Graph random_cubic_bridgeless(const GeneratorConfig& cfg) {
  const std::size_t n = cfg.vertex_count;
  if (n % 2 != 0) throw PreconditionError("cubic graphs need an even vertex count, got " + std::to_string(n));
  if (n < 4) throw PreconditionError("cubic graphs need at least 4 vertices, got " + std::to_string(n));
  Rng rng(cfg.seed);
  std::vector<Vertex> points(3 * n);
  for (std::size_t attempt = 0; attempt < cfg.max_rejections; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
    rng.shuffle(points);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      if (points[i] == points[i + 1]) {
        simple = false;
        break;
      }
      edges.emplace_back(points[i], points[i + 1]);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g(n, edges);
    if (!is_connected(g) || !find_bridges(g).empty()) continue;
    return g;
  }
  throw Error("random_cubic_bridgeless: rejection limit reached");
}

namespace {

std::vector<std::vector<int>> distance_profiles(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue{static_cast<Vertex>(s)};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex w : g.neighbors(queue[i]))
        if (dist[w] < 0) {
          dist[w] = dist[queue[i]] + 1;
          queue.push_back(w);
        }
    std::vector<int> hist(n + 1, 0);
    for (int d : dist) ++hist[d < 0 ? static_cast<int>(n) : d];
    int tri = 0;
    for (Vertex a : g.neighbors(static_cast<Vertex>(s)))
      for (Vertex b : g.neighbors(static_cast<Vertex>(s)))
        if (a < b && g.has_edge(a, b)) ++tri;
    hist.push_back(tri);
    hist.push_back(static_cast<int>(g.degree(static_cast<Vertex>(s))));
    out[s] = std::move(hist);
  }
  return out;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto pa = distance_profiles(a), pb = distance_profiles(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<Vertex> map(n, -1);
  std::vector<char> taken(n, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (taken[w] || pa[v] != pb[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        if (a.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)) != b.has_edge(map[u], static_cast<Vertex>(w)))
          ok = false;
      if (!ok) continue;
      map[v] = static_cast<Vertex>(w);
      taken[w] = 1;
      if (assign(v + 1)) return true;
      taken[w] = 0;
    }
    return false;
  };
  return assign(0);
}

std::vector<Graph> enumerate_cubic_bridgeless(std::size_t n) {
  if (n % 2 != 0 || n < 4) throw PreconditionError("cubic graphs need an even vertex count >= 4");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  std::vector<Graph> classes;
  std::size_t touched = 1;  // vertices [0, touched) have appeared

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t v, std::size_t from) {
    if (v == n) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (adj[i][j]) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      Graph g(n, edges);
      if (!is_connected(g) || !find_bridges(g).empty()) return;
      for (const Graph& c : classes)
        if (are_isomorphic(c, g)) return;
      classes.push_back(std::move(g));
      return;
    }
    if (deg[v] == 3) {
      fill(v + 1, v + 2);
      return;
    }
    if (v >= touched) return;  // unreachable from earlier vertices
    const std::size_t limit = std::min(n, touched + 1);
    for (std::size_t w = std::max(from, v + 1); w < limit; ++w) {
      if (deg[w] == 3 || adj[v][w]) continue;
      const std::size_t saved = touched;
      touched = std::max(touched, w + 1);
      adj[v][w] = adj[w][v] = 1;
      ++deg[v];
      ++deg[w];
      fill(v, w + 1);
      --deg[v];
      --deg[w];
      adj[v][w] = adj[w][v] = 0;
      touched = saved;
    }
  };
  fill(0, 1);
  return classes;
}

namespace {

using Key = std::pair<Vertex, Vertex>;

Key key(Vertex a, Vertex b) { return a < b ? Key{a, b} : Key{b, a}; }

}  // namespace

std::vector<Vertex> brute_force_type_x(const EdgeColoredGraph& g) {
  std::map<Key, Color> color;
  std::map<Vertex, std::vector<Vertex>> nbrs;
  for (const auto& ce : g.colored_edges()) {
    color[key(ce.edge.u, ce.edge.v)] = ce.color;
    nbrs[ce.edge.u].push_back(ce.edge.v);
    nbrs[ce.edge.v].push_back(ce.edge.u);
  }
  const BlockDecomposition bd = block_decomposition(g.graph());
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex v = static_cast<Vertex>(i);
    if (nbrs[v].size() != 4) continue;
    // colors of v's edges inside each block at v
    std::vector<std::vector<Color>> groups;
    for (const auto& block : bd.blocks) {
      std::vector<Color> here;
      for (const Edge& e : block)
        if (e.u == v || e.v == v) here.push_back(color[key(e.u, e.v)]);
      if (!here.empty()) groups.push_back(std::move(here));
    }
    if (groups.size() < 2) continue;
    bool found = false;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << groups.size()) && !found; ++mask) {
      std::vector<Color> a, b;
      for (std::size_t j = 0; j < groups.size(); ++j) {
        auto& dst = (mask >> j) & 1 ? a : b;
        dst.insert(dst.end(), groups[j].begin(), groups[j].end());
      }
      found = a.size() == 2 && b.size() == 2 && a[0] == a[1] && b[0] == b[1];
    }
    if (found) out.push_back(v);
  }
  return out;
}

GoodnessReport brute_force_goodness(const EdgeColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::map<Key, Color> color;
  std::vector<std::vector<Vertex>> nbrs(n);
  for (const auto& ce : g.colored_edges()) {
    color[key(ce.edge.u, ce.edge.v)] = ce.color;
    nbrs[ce.edge.u].push_back(ce.edge.v);
    nbrs[ce.edge.v].push_back(ce.edge.u);
  }
  GoodnessReport r;
  for (std::size_t v = 0; v < n; ++v)
    if (nbrs[v].size() % 2) r.violations.push_back({1, {static_cast<Vertex>(v)}, std::nullopt, ""});
  for (std::size_t v = 0; v < n; ++v)
    if (nbrs[v].size() > 4) r.violations.push_back({2, {static_cast<Vertex>(v)}, std::nullopt, ""});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto ab = color.find(key(static_cast<Vertex>(a), static_cast<Vertex>(b)));
      if (ab == color.end()) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        auto bc = color.find(key(static_cast<Vertex>(b), static_cast<Vertex>(c)));
        auto ac = color.find(key(static_cast<Vertex>(a), static_cast<Vertex>(c)));
        if (bc == color.end() || ac == color.end()) continue;
        std::set<Color> s{ab->second, bc->second, ac->second};
        if (s.size() == 2)
          r.violations.push_back({3, {static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)}, std::nullopt, ""});
      }
    }
  std::vector<Vertex> c4;
  for (std::size_t v = 0; v < n; ++v) {
    if (nbrs[v].empty()) continue;
    std::set<Color> s;
    for (Vertex w : nbrs[v]) s.insert(color[key(static_cast<Vertex>(v), w)]);
    if (s.size() != 2) c4.push_back(static_cast<Vertex>(v));
  }
  std::map<Color, std::set<Vertex>> spans;
  for (const auto& [k, c] : color) {
    spans[c].insert(k.first);
    spans[c].insert(k.second);
  }
  for (const auto& [c, vs] : spans)
    if (vs.size() > 3) r.violations.push_back({5, std::vector<Vertex>(vs.begin(), vs.end()), c, ""});
  for (Vertex v : brute_force_type_x(g)) r.violations.push_back({6, {v}, std::nullopt, ""});

  const bool others = !r.violations.empty();
  for (Vertex v : c4) r.violations.push_back({4, {v}, std::nullopt, ""});
  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.condition < b.condition; });
  if (others || c4.size() > 1) {
    r.verdict = Verdict::NotGood;
  } else if (c4.empty()) {
    r.verdict = Verdict::Good;
  } else {
    const Vertex v = c4[0];
    std::set<Color> s;
    for (Vertex w : nbrs[v]) s.insert(color[key(v, w)]);
    if (nbrs[v].size() == 2 && s.size() == 1) {
      r.verdict = Verdict::AlmostGood;
      r.bad_vertex = v;
    } else {
      r.verdict = Verdict::NotGood;
    }
  }
  return r;
}

}  // namespace cdc
