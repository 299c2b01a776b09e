#include "cdc/json_io.hpp"

namespace cdc {

namespace {

Json witnesses_to_json(const std::vector<Witness>& ws) {
  Json out = Json::array();
  for (const Witness& w : ws) {
    Json j{{"kind", w.kind}, {"vertices", w.vertices}};
    if (w.index >= 0) j["index"] = w.index;
    if (w.kind == "edge_count") j["count"] = w.count;
    if (!w.detail.empty()) j["detail"] = w.detail;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

Json cycle_to_json(const Cycle& c) { return Json(c.vertices()); }

Json cover_to_json(const Graph& g, const CycleDoubleCover& cover) {
  Json cycles = Json::array();
  for (const Cycle& c : cover.cycles) cycles.push_back(cycle_to_json(c));
  std::vector<int> count(g.edge_count(), 0);
  for (const Cycle& c : cover.cycles)
    for (const Edge& e : c.edges())
      if (auto i = g.edge_index(e.u, e.v)) ++count[*i];
  Json usage = Json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    usage.push_back({{"edge", {g.edges()[i].u, g.edges()[i].v}}, {"count", count[i]}});
  return {{"vertex_count", g.vertex_count()}, {"cycles", cycles}, {"edge_usage", usage}};
}

CycleDoubleCover cover_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("cycles")) throw ParseError("cover object has no \"cycles\" member", 0);
    arr = &j.at("cycles");
  }
  if (!arr->is_array()) throw ParseError("cycles must be an array", 0);
  CycleDoubleCover cover;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const Json& c = (*arr)[i];
    if (!c.is_array()) throw ParseError("cycle is not an array", i);
    std::vector<Vertex> seq;
    for (const Json& v : c) {
      if (!v.is_number_integer()) throw ParseError("cycle vertex is not an integer", i);
      seq.push_back(v.get<Vertex>());
    }
    try {
      cover.cycles.push_back(Cycle::from_vertices(seq));
    } catch (const GraphError& e) {
      throw ParseError(e.what(), i);
    }
  }
  return cover;
}

Json to_json(const GoodnessReport& r) {
  Json vs = Json::array();
  for (const Violation& v : r.violations) {
    Json j{{"condition", v.condition}, {"vertices", v.vertices}, {"detail", v.detail}};
    if (v.color) j["color"] = *v.color;
    vs.push_back(std::move(j));
  }
  Json out{{"verdict", to_string(r.verdict)}, {"violations", vs}};
  if (r.bad_vertex) out["bad_vertex"] = *r.bad_vertex;
  return out;
}

Json to_json(const CdcVerdict& v) {
  Json usage = Json::array();
  for (const EdgeUsage& u : v.usage) usage.push_back({{"edge", {u.edge.u, u.edge.v}}, {"count", u.count}});
  return {{"accepted", v.accepted}, {"edge_usage", usage}, {"witnesses", witnesses_to_json(v.witnesses)}};
}

Json to_json(const DecompositionVerdict& v) {
  return {{"accepted", v.accepted}, {"witnesses", witnesses_to_json(v.witnesses)}};
}

Json to_json(const CaseFailure& f) {
  Json out{{"attempted", to_string(f.attempted)},
           {"reason", f.reason},
           {"fallback", to_string(f.fallback)},
           {"report", to_json(f.report)},
           {"graph", serialize_colored_edge_list(f.graph)}};
  if (f.cycle) out["cycle"] = cycle_to_json(*f.cycle);
  return out;
}

Json to_json(const DecompositionTrace& t) {
  Json steps = Json::array();
  for (const TraceStep& s : t.steps) {
    Json j{{"depth", s.depth}, {"case", to_string(s.tag)}, {"cycle", cycle_to_json(s.cycle)},
           {"after", to_string(s.after.verdict)}};
    if (!s.notes.empty()) j["notes"] = s.notes;
    steps.push_back(std::move(j));
  }
  Json cycles = Json::array();
  for (std::size_t i = 0; i < t.cycles.size(); ++i)
    cycles.push_back({{"case", to_string(t.cycle_tags[i])}, {"cycle", cycle_to_json(t.cycles[i])}});
  Json counts = Json::object();
  for (const auto& [tag, n] : t.case_counts) counts[to_string(tag)] = n;
  Json out{{"success", t.success}, {"steps", steps}, {"cycles", cycles}, {"flags", t.flags}, {"case_counts", counts}};
  if (t.failure) out["failure"] = to_json(*t.failure);
  return out;
}

}  // namespace cdc
