#include "cdc/transform.hpp"

#include <map>

namespace cdc {

std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::ContractTriangle: return "ContractTriangle";
    case TransformKind::ContractEdge: return "ContractEdge";
    case TransformKind::MergeVertices: return "MergeVertices";
    case TransformKind::RewireDetour: return "RewireDetour";
    case TransformKind::ContractRectangle: return "ContractRectangle";
    case TransformKind::Restrict: return "Restrict";
  }
  return "?";
}

namespace {

Route reversed(Route r) {
  std::reverse(r.path.begin(), r.path.end());
  std::reverse(r.colors.begin(), r.colors.end());
  return r;
}

}  // namespace

TransformBuilder::TransformBuilder(const EdgeColoredGraph& parent, TransformKind kind)
    : parent_(parent),
      kind_(kind),
      merged_into_(parent.vertex_count(), -1),
      removed_(parent.vertex_count(), 0),
      consumed_(parent.edge_count(), 0) {}

Vertex TransformBuilder::rep(Vertex v) const {
  while (merged_into_[v] >= 0) v = merged_into_[v];
  return v;
}

void TransformBuilder::merge(Vertex keep, Vertex absorbed) {
  Vertex a = rep(keep), b = rep(absorbed);
  if (a == b) throw GraphError("vertices already merged");
  merged_into_[b] = a;
}

void TransformBuilder::remove_vertex(Vertex v) { removed_.at(v) = 1; }

void TransformBuilder::consume(Vertex a, Vertex b) {
  auto idx = parent_.graph().edge_index(a, b);
  if (!idx) throw GraphError("transform: no parent edge " + to_string(Edge(a, b)));
  if (consumed_[*idx]) throw GraphError("transform: parent edge " + to_string(Edge(a, b)) + " consumed twice");
  consumed_[*idx] = 1;
}

void TransformBuilder::drop_edge(Vertex a, Vertex b) {
  consume(a, b);
  dropped_.push_back({Edge(a, b), parent_.color(a, b)});
}

void TransformBuilder::route_edge(std::vector<Vertex> path, Color child_color) {
  Route r;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    consume(path[i], path[i + 1]);
    r.colors.push_back(parent_.color(path[i], path[i + 1]));
  }
  r.path = std::move(path);
  added_.push_back({std::move(r), child_color});
}

void TransformBuilder::route_vertex(std::vector<Vertex> path) {
  Route r;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    consume(path[i], path[i + 1]);
    r.colors.push_back(parent_.color(path[i], path[i + 1]));
  }
  r.path = std::move(path);
  passages_.emplace_back(r.path.front(), std::move(r));
}

TransformBuilder::Result TransformBuilder::finish() const {
  const std::size_t n = parent_.vertex_count();
  Transform t;
  t.kind = kind_;
  t.parent_vertex_count = n;
  t.to_child.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed_[v]) continue;
    for (Vertex w : parent_.neighbors(static_cast<Vertex>(v)))
      if (!consumed_[*parent_.graph().edge_index(static_cast<Vertex>(v), w)])
        throw GraphError("transform: removed vertex " + std::to_string(v) + " keeps edge to " + std::to_string(w));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (removed_[v]) continue;
    if (rep(static_cast<Vertex>(v)) != static_cast<Vertex>(v)) continue;
    t.to_child[v] = static_cast<Vertex>(t.to_parent.size());
    t.to_parent.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!removed_[v] && t.to_child[v] < 0) t.to_child[v] = t.to_child[rep(static_cast<Vertex>(v))];

  auto image = [&](Vertex v) {
    Vertex c = t.to_child[v];
    if (c < 0) throw GraphError("transform: route endpoint " + std::to_string(v) + " was removed");
    return c;
  };

  std::map<Edge, std::pair<Route, Color>> child_edges;
  auto add = [&](Route r, Color c) {
    Vertex a = image(r.path.front()), b = image(r.path.back());
    if (a == b) throw GraphError("transform: child edge would be a loop at " + std::to_string(a));
    if (a > b) r = reversed(std::move(r));
    Edge e(a, b);
    if (!child_edges.emplace(e, std::make_pair(std::move(r), c)).second)
      throw GraphError("transform: parallel child edge " + to_string(e));
  };
  const auto& pedges = parent_.graph().edges();
  for (std::size_t i = 0; i < pedges.size(); ++i) {
    if (consumed_[i]) continue;
    add(Route{{pedges[i].u, pedges[i].v}, {parent_.colors()[i]}}, parent_.colors()[i]);
  }
  for (const auto& a : added_) add(a.route, a.color);

  std::vector<ColoredEdge> ces;
  for (auto& [e, rc] : child_edges) {
    ces.push_back({e, rc.second});
    bool same = std::all_of(rc.first.colors.begin(), rc.first.colors.end(), [&](Color c) { return c == rc.second; });
    if (!same) t.recolors.push_back({e, rc.first.colors.front(), rc.second});
    t.edge_routes.push_back(rc.first);
  }
  for (const auto& [start, route] : passages_) {
    Vertex c = image(start);
    auto it = std::find_if(t.vertex_routes.begin(), t.vertex_routes.end(), [&](const auto& vr) { return vr.child == c; });
    if (it == t.vertex_routes.end()) {
      t.vertex_routes.push_back({c, {}});
      it = t.vertex_routes.end() - 1;
    }
    it->routes.push_back(route);
  }
  t.dropped = dropped_;
  EdgeColoredGraph child(t.to_parent.size(), ces);
  return {std::move(t), std::move(child)};
}

EdgeColoredGraph invert(const EdgeColoredGraph& child, const Transform& t) {
  const auto& cedges = child.graph().edges();
  if (cedges.size() != t.edge_routes.size()) throw GraphError("invert: route table does not match child edges");
  if (child.vertex_count() != t.to_parent.size()) throw GraphError("invert: vertex map does not match child");
  std::vector<ColoredEdge> out;
  auto append = [&](const Route& r) {
    if (r.path.size() != r.colors.size() + 1) throw GraphError("invert: malformed route");
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) out.push_back({Edge(r.path[i], r.path[i + 1]), r.colors[i]});
  };
  for (std::size_t i = 0; i < cedges.size(); ++i) {
    const Route& r = t.edge_routes[i];
    if (r.path.size() < 2) throw GraphError("invert: empty route");
    if (t.to_child.at(r.path.front()) != cedges[i].u || t.to_child.at(r.path.back()) != cedges[i].v)
      throw GraphError("invert: route endpoints do not map to child edge " + to_string(cedges[i]));
    const Color cc = child.colors()[i];
    bool recolored = std::any_of(t.recolors.begin(), t.recolors.end(), [&](const auto& rc) { return rc.child_edge == cedges[i]; });
    bool same = std::all_of(r.colors.begin(), r.colors.end(), [&](Color c) { return c == cc; });
    if (recolored == same) throw GraphError("invert: recolor record mismatch on " + to_string(cedges[i]));
    append(r);
  }
  for (const auto& vr : t.vertex_routes) {
    for (const Route& r : vr.routes) {
      for (Vertex p : r.path)
        if (t.to_child.at(p) != vr.child) throw GraphError("invert: passage leaves its merged vertex");
      append(r);
    }
  }
  out.insert(out.end(), t.dropped.begin(), t.dropped.end());
  return EdgeColoredGraph(t.parent_vertex_count, out);
}

TransformBuilder::Result restrict_to_edges(const EdgeColoredGraph& g, const std::vector<Edge>& keep) {
  TransformBuilder b(g, TransformKind::Restrict);
  std::vector<Edge> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> touched(g.vertex_count(), 0);
  for (const Edge& e : sorted) touched[e.u] = touched[e.v] = 1;
  for (const Edge& e : g.graph().edges())
    if (!std::binary_search(sorted.begin(), sorted.end(), e)) b.drop_edge(e.u, e.v);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!touched[v]) b.remove_vertex(static_cast<Vertex>(v));
  return b.finish();
}

namespace {

Route oriented_route(const Transform& t, const std::vector<Edge>& child_edges, Vertex from, Vertex to) {
  Edge e(from, to);
  auto it = std::lower_bound(child_edges.begin(), child_edges.end(), e);
  const Route& r = t.edge_routes[static_cast<std::size_t>(it - child_edges.begin())];
  return from == e.u ? r : reversed(r);
}

}  // namespace

std::optional<Cycle> lift_cycle(const Transform& t, const Cycle& child, std::vector<std::vector<char>>& used) {
  if (used.size() != t.vertex_routes.size()) {
    used.clear();
    for (const auto& vr : t.vertex_routes) used.emplace_back(vr.routes.size(), 0);
  }
  // child_edges is implicit: edge_routes follow the sorted child edge order,
  // which we rebuild from the routes' endpoints.
  std::vector<Edge> child_edges;
  child_edges.reserve(t.edge_routes.size());
  for (const Route& r : t.edge_routes) child_edges.emplace_back(t.to_child[r.path.front()], t.to_child[r.path.back()]);

  auto passage = [&](Vertex at_child, Vertex a, Vertex b) -> std::optional<std::vector<Vertex>> {
    for (std::size_t i = 0; i < t.vertex_routes.size(); ++i) {
      if (t.vertex_routes[i].child != at_child) continue;
      for (std::size_t j = 0; j < t.vertex_routes[i].routes.size(); ++j) {
        if (used[i][j]) continue;
        const auto& p = t.vertex_routes[i].routes[j].path;
        if (p.front() == a && p.back() == b) {
          used[i][j] = 1;
          return p;
        }
        if (p.front() == b && p.back() == a) {
          used[i][j] = 1;
          return std::vector<Vertex>(p.rbegin(), p.rend());
        }
      }
    }
    return std::nullopt;
  };

  const auto& cv = child.vertices();
  const std::size_t k = cv.size();
  std::vector<Vertex> seq;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex from = cv[i], to = cv[(i + 1) % k];
    Edge e(from, to);
    auto it = std::lower_bound(child_edges.begin(), child_edges.end(), e);
    if (it == child_edges.end() || *it != e) return std::nullopt;
    Route r = oriented_route(t, child_edges, from, to);
    if (!seq.empty() && seq.back() != r.path.front()) {
      auto p = passage(from, seq.back(), r.path.front());
      if (!p) return std::nullopt;
      seq.insert(seq.end(), p->begin() + 1, p->end() - 1);
    }
    if (seq.empty())
      seq.insert(seq.end(), r.path.begin(), r.path.end());
    else
      seq.insert(seq.end(), r.path.begin() + (seq.back() == r.path.front() ? 1 : 0), r.path.end());
  }
  if (seq.back() == seq.front()) {
    seq.pop_back();
  } else {
    auto p = passage(cv[0], seq.back(), seq.front());
    if (!p) return std::nullopt;
    seq.insert(seq.end(), p->begin() + 1, p->end() - 1);
  }
  try {
    return Cycle::from_vertices(std::move(seq));
  } catch (const GraphError&) {
    return std::nullopt;
  }
}

std::optional<std::vector<Cycle>> lift_all(const Transform& t, const std::vector<Cycle>& child_cycles) {
  std::vector<std::vector<char>> used;
  for (const auto& vr : t.vertex_routes) used.emplace_back(vr.routes.size(), 0);
  std::vector<Cycle> out;
  for (const Cycle& c : child_cycles) {
    auto lifted = lift_cycle(t, c, used);
    if (!lifted) return std::nullopt;
    out.push_back(std::move(*lifted));
  }
  for (const auto& u : used)
    if (std::find(u.begin(), u.end(), 0) != u.end()) return std::nullopt;
  return out;
}

}  // namespace cdc
