#include <functional>
#include <set>

#include "cdc/decomposer.hpp"

namespace cdc {

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::BaseCycle: return "BaseCycle";
    case CaseTag::RainbowTriangle: return "RainbowTriangle";
    case CaseTag::AllTypeII: return "AllTypeII";
    case CaseTag::Case1_1: return "Case1_1";
    case CaseTag::Case1_2: return "Case1_2";
    case CaseTag::Case2_1: return "Case2_1";
    case CaseTag::Case2_2_1a: return "Case2_2_1a";
    case CaseTag::Case2_2_1b: return "Case2_2_1b";
    case CaseTag::Case2_2_2a: return "Case2_2_2a";
    case CaseTag::Case2_2_2b: return "Case2_2_2b";
    case CaseTag::Case2_2_2c: return "Case2_2_2c";
    case CaseTag::Case2_2_2d: return "Case2_2_2d";
    case CaseTag::Fallback: return "Fallback";
  }
  return "?";
}

namespace {

bool is_type1(const EdgeColoredGraph& g, Vertex v) { return g.degree(v) == 2 && g.color_degree(v) == 2; }

bool is_type2(const EdgeColoredGraph& g, Vertex v) {
  if (g.degree(v) != 4) return false;
  try {
    return classify_vertex(g, v) == VertexClass::TypeII;
  } catch (const NotClassifiable&) {
    return false;
  }
}

// Neighbors of x joined by color c, other than `skip`.
std::vector<Vertex> neighbors_by_color(const EdgeColoredGraph& g, Vertex x, Color c, Vertex skip = -1) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(x))
    if (w != skip && g.color(x, w) == c) out.push_back(w);
  return out;
}

Vertex need(const std::optional<Vertex>& v, const char* name) {
  if (!v) throw PatternError(std::string("pattern is missing ") + name);
  return *v;
}

}  // namespace

CasePattern match_case1(const EdgeColoredGraph& g) {
  CasePattern p;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex v = static_cast<Vertex>(i);
    if (g.degree(v) == 2 && g.color_degree(v) == 1) {
      p.v = v;
      break;
    }
  }
  const Vertex v = need(p.v, "bad vertex");
  const Vertex x1 = g.neighbors(v)[0], x2 = g.neighbors(v)[1];
  p.x1 = x1;
  p.x2 = x2;
  p.alpha = g.color(v, x1);
  if (g.has_edge(x1, x2)) {
    p.tag = CaseTag::Case1_1;
    if (g.color(x1, x2) != *p.alpha) throw PatternError("triangle at the bad vertex is not monochromatic");
    if (!is_type2(g, x1) || !is_type2(g, x2)) throw PatternError("Case 1.1 needs Type II neighbors");
    std::vector<Vertex> r1, r2;
    for (Vertex w : g.neighbors(x1))
      if (g.color(x1, w) != *p.alpha) r1.push_back(w);
    for (Vertex w : g.neighbors(x2))
      if (g.color(x2, w) != *p.alpha) r2.push_back(w);
    if (r1.size() != 2 || r2.size() != 2) throw PatternError("Case 1.1 neighbors do not split 2+2");
    p.y1 = r1[0];
    p.w1 = r1[1];
    p.y2 = r2[0];
    p.w2 = r2[1];
    p.gamma = g.color(x1, r1[0]);
    p.delta = g.color(x2, r2[0]);
    for (Vertex a : r1)
      for (Vertex b : r2)
        if (a == b) throw PatternError("Case 1.1 outer neighbors overlap at " + std::to_string(a));
  } else {
    p.tag = CaseTag::Case1_2;
    if (!is_type1(g, x1) || !is_type1(g, x2)) throw PatternError("Case 1.2 needs Type I neighbors");
    p.y1 = g.neighbors(x1)[0] == v ? g.neighbors(x1)[1] : g.neighbors(x1)[0];
    p.y2 = g.neighbors(x2)[0] == v ? g.neighbors(x2)[1] : g.neighbors(x2)[0];
  }
  return p;
}

CasePattern match_case2_1(const EdgeColoredGraph& g) {
  auto sp = longest_singular_path(g);
  if (sp.length < 3) throw PatternError("longest singular path has length " + std::to_string(sp.length));
  CasePattern p;
  p.tag = CaseTag::Case2_1;
  p.v0 = sp.path[0];
  p.v1 = sp.path[1];
  p.v2 = sp.path[2];
  p.v3 = sp.path[3];
  if (!is_type1(g, *p.v1) || !is_type1(g, *p.v2)) throw PatternError("singular path interior is not Type I");
  p.alpha = g.color(*p.v1, *p.v2);
  return p;
}

CasePattern match_case2_2(const EdgeColoredGraph& g) {
  CasePattern p;
  for (std::size_t i = 0; i < g.vertex_count() && !p.v; ++i) {
    const Vertex v = static_cast<Vertex>(i);
    if (!is_type1(g, v)) continue;
    auto nb = g.neighbors(v);
    if (is_type2(g, nb[0]) && is_type2(g, nb[1])) p.v = v;
  }
  const Vertex v = need(p.v, "Type I vertex between Type II vertices");
  Vertex x1 = g.neighbors(v)[0], x2 = g.neighbors(v)[1];
  Color alpha = g.color(v, x1), beta = g.color(v, x2);
  auto side = [&](Vertex x, Color c, Vertex& y, Vertex& w, Vertex& z, Color& other) {
    auto ys = neighbors_by_color(g, x, c, v);
    if (ys.size() != 1) throw PatternError("vertex " + std::to_string(x) + " lacks a second edge of its pair with v");
    y = ys[0];
    std::vector<Vertex> rest;
    for (Vertex u : g.neighbors(x))
      if (g.color(x, u) != c) rest.push_back(u);
    if (rest.size() != 2) throw PatternError("vertex " + std::to_string(x) + " does not split 2+2");
    w = rest[0];
    z = rest[1];
    other = g.color(x, w);
  };
  Vertex y1, w1, z1, y2, w2, z2;
  Color gamma, delta;
  side(x1, alpha, y1, w1, z1, gamma);
  side(x2, beta, y2, w2, z2, delta);

  auto swap_sides = [&]() {
    std::swap(x1, x2);
    std::swap(y1, y2);
    std::swap(w1, w2);
    std::swap(z1, z2);
    std::swap(alpha, beta);
    std::swap(gamma, delta);
    p.normalizations.push_back("swap sides 1 and 2");
  };
  auto put_first = [&](Vertex& w, Vertex& z, Vertex target, const char* label) {
    if (w != target) {
      std::swap(w, z);
      p.normalizations.push_back(std::string("swap ") + label);
    }
  };

  std::vector<Vertex> common;
  for (Vertex a : {w1, z1})
    for (Vertex b : {w2, z2})
      if (a == b) common.push_back(a);
  auto in = [](Vertex a, Vertex b, Vertex c) { return a == b || a == c; };
  if (!common.empty()) {
    const Vertex c = *std::min_element(common.begin(), common.end());
    put_first(w1, z1, c, "w1/z1");
    put_first(w2, z2, c, "w2/z2");
    p.tag = CaseTag::Case2_2_2a;
  } else if (y1 == y2) {
    p.tag = CaseTag::Case2_2_2b;
  } else if (in(y1, w2, z2) || in(y2, w1, z1)) {
    if (!in(y1, w2, z2)) swap_sides();
    put_first(w2, z2, y1, "w2/z2");
    if (in(y2, w1, z1)) {
      put_first(w1, z1, y2, "w1/z1");
      p.tag = CaseTag::Case2_2_2d;
    } else {
      p.tag = CaseTag::Case2_2_2c;
    }
  } else {
    p.tag = CaseTag::Case2_2_1a;
  }
  p.x1 = x1;
  p.x2 = x2;
  p.y1 = y1;
  p.y2 = y2;
  p.w1 = w1;
  p.w2 = w2;
  p.z1 = z1;
  p.z2 = z2;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.delta = delta;
  return p;
}

Reduction case1_1(const EdgeColoredGraph& g, const CasePattern& p) {
  const Vertex v = need(p.v, "v"), x1 = need(p.x1, "x1"), x2 = need(p.x2, "x2");
  TransformBuilder b(g, TransformKind::ContractTriangle);
  b.merge(x1, v);
  b.merge(x1, x2);
  b.route_vertex({x1, v, x2});
  b.route_vertex({x1, x2});
  auto r = b.finish();
  return {std::move(r.transform), std::move(r.child)};
}

Reduction case1_2(const EdgeColoredGraph& g, const CasePattern& p) {
  const Vertex v = need(p.v, "v"), x1 = need(p.x1, "x1");
  TransformBuilder b(g, TransformKind::ContractEdge);
  b.merge(x1, v);
  b.route_vertex({x1, v});
  auto r = b.finish();
  return {std::move(r.transform), std::move(r.child)};
}

Reduction case2_1(const EdgeColoredGraph& g, const CasePattern& p) {
  const Vertex v1 = need(p.v1, "v1"), v2 = need(p.v2, "v2"), v3 = need(p.v3, "v3");
  if (g.has_edge(v1, v3)) throw PatternError("v1 and v3 already adjacent");
  TransformBuilder b(g, TransformKind::ContractEdge);
  b.route_edge({v1, v2, v3}, g.color(v2, v3));
  b.remove_vertex(v2);
  auto r = b.finish();
  return {std::move(r.transform), std::move(r.child)};
}

Reduction case2_2_1_merge(const EdgeColoredGraph& g, const CasePattern& p) {
  const Vertex v = need(p.v, "v"), x1 = need(p.x1, "x1"), x2 = need(p.x2, "x2");
  const Vertex y1 = need(p.y1, "y1"), y2 = need(p.y2, "y2");
  TransformBuilder b(g, TransformKind::MergeVertices);
  b.route_edge({y1, x1, v}, *p.alpha);
  b.route_edge({v, x2, y2}, *p.beta);
  b.merge(x1, x2);
  auto r = b.finish();
  return {std::move(r.transform), std::move(r.child)};
}

Cycle case2_2_2a_direct(const CasePattern& p) {
  return Cycle::from_vertices({need(p.x1, "x1"), need(p.v, "v"), need(p.x2, "x2"), need(p.w1, "w1")});
}

Reduction case2_2_2a_rewire(const EdgeColoredGraph& g, const CasePattern& p) {
  const Vertex v = need(p.v, "v"), x1 = need(p.x1, "x1"), x2 = need(p.x2, "x2"), w = need(p.w1, "w1");
  const Vertex y1 = need(p.y1, "y1"), y2 = need(p.y2, "y2"), z1 = need(p.z1, "z1"), z2 = need(p.z2, "z2");
  TransformBuilder b(g, TransformKind::RewireDetour);
  b.route_edge({y1, x1, w}, *p.alpha);
  b.route_edge({w, x2, y2}, *p.beta);
  b.route_edge({z1, x1, v}, *p.gamma);
  b.route_edge({v, x2, z2}, *p.delta);
  b.remove_vertex(x1);
  b.remove_vertex(x2);
  auto r = b.finish();
  return {std::move(r.transform), std::move(r.child)};
}

Reduction case2_2_2b(const EdgeColoredGraph& g, const CasePattern& p) {
  const Vertex v = need(p.v, "v"), x1 = need(p.x1, "x1"), x2 = need(p.x2, "x2"), y = need(p.y1, "y1");
  if (g.degree(y) != 2) throw PatternError("shared neighbor y is not of degree 2");
  TransformBuilder b(g, TransformKind::ContractRectangle);
  b.merge(x1, y);
  b.merge(x1, x2);
  b.merge(x1, v);
  b.route_vertex({x1, y, x2});
  b.route_vertex({x1, v, x2});
  auto r = b.finish();
  return {std::move(r.transform), std::move(r.child)};
}

Reduction case2_2_2c(const EdgeColoredGraph& g, const CasePattern& p) {
  const Vertex v = need(p.v, "v"), x1 = need(p.x1, "x1"), x2 = need(p.x2, "x2");
  const Vertex y1 = need(p.y1, "y1"), y2 = need(p.y2, "y2"), z2 = need(p.z2, "z2");
  if (g.degree(y1) != 2) throw PatternError("y1 = w2 is not of degree 2");
  TransformBuilder b(g, TransformKind::ContractRectangle);
  b.route_edge({x1, y1, x2, y2}, *p.beta);
  b.route_edge({x1, v, x2, z2}, *p.beta);
  b.remove_vertex(y1);
  b.remove_vertex(v);
  b.remove_vertex(x2);
  auto r = b.finish();
  return {std::move(r.transform), std::move(r.child)};
}

Cycle case2_2_2d_direct(const CasePattern& p) {
  return Cycle::from_vertices({need(p.x1, "x1"), need(p.y1, "y1"), need(p.x2, "x2"), need(p.y2, "y2")});
}

std::optional<std::vector<Cycle>> recombine_case2_2_1a(const CasePattern& p, const Reduction& r,
                                                       const std::vector<Cycle>& child_cycles, std::string* why,
                                                       std::size_t x_choice) {
  const Transform& t = r.transform;
  const Vertex x1 = need(p.x1, "x1"), x2 = need(p.x2, "x2"), v = need(p.v, "v");
  const Vertex y2 = need(p.y2, "y2");
  const Vertex cx = t.to_child[x1], cv = t.to_child[v];
  auto fail = [&](std::string s) -> std::optional<std::vector<Cycle>> {
    if (why) *why = std::move(s);
    return std::nullopt;
  };
  auto up = [&](Vertex c) { return t.to_parent[c]; };
  auto on_x1_side = [&](Vertex child_nb) { return child_nb == t.to_child[*p.w1] || child_nb == t.to_child[*p.z1]; };

  std::vector<Cycle> out, touching;
  for (const Cycle& c : child_cycles) {
    if (c.contains(cx) || c.contains(cv)) {
      touching.push_back(c);
      continue;
    }
    std::vector<Vertex> seq;
    for (Vertex u : c.vertices()) seq.push_back(up(u));
    out.push_back(Cycle::from_vertices(seq));
  }

  // The cycle through v, written from v towards y2.
  auto through_v = std::find_if(touching.begin(), touching.end(), [&](const Cycle& c) { return c.contains(cv); });
  if (through_v == touching.end()) return fail("no child cycle through v");
  const std::vector<Vertex> a = through_v->walk_from(cv, t.to_child[y2]);
  std::vector<Cycle> via_x;
  for (const Cycle& c : touching)
    if (&c != &*through_v) via_x.push_back(c);

  // (x, b', ..., a') -> [x1, v, x2, b', ..., a'] with a' on the x1 side
  auto close_through_v = [&](const Cycle& bx) {
    const std::size_t pos = *bx.position(cx);
    const Vertex fwd = bx.at(pos + 1), back = bx.at(pos + bx.length() - 1);
    const std::vector<Vertex> walk = bx.walk_from(cx, on_x1_side(fwd) ? back : fwd);
    std::vector<Vertex> seq{x1, v, x2};
    for (std::size_t i = 1; i < walk.size(); ++i) seq.push_back(up(walk[i]));
    return Cycle::from_vertices(seq);
  };

  if (touching.size() == 2) {
    if (!through_v->contains(cx)) return fail("two touching cycles but v's cycle misses x");
    if (via_x.size() != 1 || via_x[0].contains(cv)) return fail("unexpected second touching cycle");
    // a = v, y2, S2..., p, x, q, S1..., y1
    const std::size_t ix = static_cast<std::size_t>(std::find(a.begin(), a.end(), cx) - a.begin());
    const Vertex pn = a[ix - 1], qn = a[ix + 1];
    if (on_x1_side(pn) == on_x1_side(qn)) return fail("cycle through x uses one side twice");
    std::vector<Vertex> s2(a.begin() + 1, a.begin() + static_cast<long>(ix));  // y2 .. p
    std::vector<Vertex> s1(a.begin() + static_cast<long>(ix) + 1, a.end());   // q .. y1
    if (!on_x1_side(pn)) {
      std::vector<Vertex> c1{x2};
      for (Vertex u : s2) c1.push_back(up(u));
      std::vector<Vertex> c2{x1};
      for (Vertex u : s1) c2.push_back(up(u));
      out.push_back(Cycle::from_vertices(c1));
      out.push_back(Cycle::from_vertices(c2));
    } else {
      std::vector<Vertex> c1{x1};
      for (auto it = s2.rbegin(); it != s2.rend(); ++it) c1.push_back(up(*it));
      c1.push_back(x2);
      for (Vertex u : s1) c1.push_back(up(u));
      out.push_back(Cycle::from_vertices(c1));
    }
    out.push_back(close_through_v(via_x[0]));
    return out;
  }
  if (touching.size() == 3) {
    if (through_v->contains(cx)) return fail("three touching cycles but v's cycle passes x");
    if (via_x.size() != 2) return fail("unexpected cycles through x");
    out.push_back(close_through_v(via_x[x_choice % 2]));
    return out;
  }
  return fail(std::to_string(touching.size()) + " child cycles meet v or x");
}

std::vector<Cycle> candidates_case2_2_1b(const CasePattern& p, const Reduction& merged, const Transform& restrict,
                                         const std::vector<Cycle>& block_cycles, Vertex t_in_block) {
  const Transform& mt = merged.transform;
  const Vertex x1 = need(p.x1, "x1"), x2 = need(p.x2, "x2"), v = need(p.v, "v");
  const Vertex cx = mt.to_child[x1];
  const Vertex bx = restrict.to_child[cx];
  auto on_x1_side = [&](Vertex merged_nb) { return merged_nb == mt.to_child[*p.w1] || merged_nb == mt.to_child[*p.z1]; };
  std::vector<Cycle> out;
  for (const Cycle& c : block_cycles) {
    if (bx < 0 || !c.contains(bx) || c.contains(t_in_block)) continue;
    const auto pos = *c.position(bx);
    std::vector<Vertex> walk = c.walk_from(bx, c.at(pos + 1));
    // walk in merged ids: x, a, ..., b
    for (Vertex& u : walk) u = restrict.to_parent[u];
    if (!on_x1_side(walk[1])) std::reverse(walk.begin() + 1, walk.end());
    if (!on_x1_side(walk[1]) || on_x1_side(walk.back())) continue;
    std::vector<Vertex> seq{v, x1};
    for (std::size_t i = 1; i < walk.size(); ++i) seq.push_back(mt.to_parent[walk[i]]);
    seq.push_back(x2);
    out.push_back(Cycle::from_vertices(seq));
  }
  return out;
}

Cycle find_cycle_all_type2(const EdgeColoredGraph& g) {
  Vertex start = -1;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex v = static_cast<Vertex>(i);
    if (g.degree(v) == 0) continue;
    if (!is_type2(g, v)) throw PreconditionError("vertex " + std::to_string(v) + " is not Type II");
    if (start < 0) start = v;
  }
  if (start < 0) throw PreconditionError("graph has no edges");
  std::vector<Vertex> path{start};
  std::set<Color> used;
  while (true) {
    const Vertex cur = path.back();
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (path.size() >= 2 && w == path[path.size() - 2]) continue;
      if (!used.count(g.color(cur, w))) {
        next = w;
        break;
      }
    }
    if (next >= 0) {
      auto it = std::find(path.begin(), path.end(), next);
      if (it != path.end()) {
        // the walk hit itself along an unused color: that closes a rainbow cycle
        return Cycle::from_vertices(std::vector<Vertex>(it, path.end()));
      }
      used.insert(g.color(cur, next));
      path.push_back(next);
      continue;
    }
    // Stuck: close at the earliest-found back edge giving a rainbow cycle.
    for (std::size_t i = path.size() - 2; i-- > 0;) {
      if (!g.has_edge(cur, path[i + 1]) || path.size() - (i + 1) < 3) continue;
      Cycle c = Cycle::from_vertices(std::vector<Vertex>(path.begin() + static_cast<long>(i) + 1, path.end()));
      if (is_rainbow(g, c)) return c;
    }
    throw PreconditionError("rainbow walk got stuck without closing a cycle");
  }
}

namespace {

struct BudgetExceeded {};

}  // namespace

FallbackResult fallback_search(const EdgeColoredGraph& g, const FallbackOptions& opts) {
  FallbackResult result;
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) return result;
  std::optional<Vertex> bad;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(static_cast<Vertex>(i)) == 2 && g.color_degree(static_cast<Vertex>(i)) == 1) bad = static_cast<Vertex>(i);
  const std::size_t max_len = g.edge_count() < 64 ? n : std::min(n, opts.max_cycle_length);

  std::uint64_t nodes = 0;
  auto tick = [&]() {
    if (opts.max_nodes && ++nodes > opts.max_nodes) throw BudgetExceeded{};
  };
  auto acceptable = [&](const Cycle& c) {
    const bool through_bad = bad && c.contains(*bad);
    if (through_bad ? !is_almost_rainbow_at(g, c, *bad) : !is_rainbow(g, c)) return false;
    tick();
    GoodnessReport r = check_goodness(remove_cycle(g, c));
    if (r.verdict == Verdict::Good) return !bad || through_bad;
    return r.verdict == Verdict::AlmostGood && bad && !through_bad && r.bad_vertex == bad;
  };

  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::map<Color, int> count;
  std::vector<Cycle> found;
  std::function<void(Vertex, std::size_t)> extend = [&](Vertex s, std::size_t len) {
    tick();
    const Vertex cur = path.back();
    for (Vertex w : g.neighbors(cur)) {
      if (w == s && path.size() == len && path[1] < path.back()) {
        found.push_back(Cycle::from_vertices(path));
        continue;
      }
      if (w <= s || on_path[w] || path.size() >= len) continue;
      const Color col = g.color(cur, w);
      int& cnt = count[col];
      const bool at_bad = bad && (cur == *bad || w == *bad);
      if (cnt >= 2 || (cnt == 1 && !at_bad)) continue;
      ++cnt;
      on_path[w] = 1;
      path.push_back(w);
      extend(s, len);
      path.pop_back();
      on_path[w] = 0;
      --count[col];
    }
  };

  try {
    for (std::size_t len = 3; len <= max_len; ++len) {
      found.clear();
      for (std::size_t s = 0; s < n; ++s) {
        if (g.degree(static_cast<Vertex>(s)) == 0) continue;
        path = {static_cast<Vertex>(s)};
        on_path[s] = 1;
        extend(static_cast<Vertex>(s), len);
        on_path[s] = 0;
      }
      std::sort(found.begin(), found.end());
      for (const Cycle& c : found)
        if (acceptable(c)) {
          result.status = SearchStatus::Found;
          result.cycle = c;
          result.nodes = nodes;
          return result;
        }
    }
    result.status = max_len < n ? SearchStatus::Indeterminate : SearchStatus::Absent;
  } catch (const BudgetExceeded&) {
    result.status = SearchStatus::Indeterminate;
  }
  result.nodes = nodes;
  return result;
}

}  // namespace cdc
