#include "cdc/decomposer.hpp"

#include <functional>
#include <memory>
#include <variant>

#include "cdc/verify.hpp"

namespace cdc {

namespace {

std::optional<Vertex> bad_vertex_of(const EdgeColoredGraph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex v = static_cast<Vertex>(i);
    if (g.degree(v) == 2 && g.color_degree(v) == 1) return v;
  }
  return std::nullopt;
}

// Removes the cycles in order from a good graph, requiring each remainder
// to stay good.
bool removals_stay_good(EdgeColoredGraph g, const std::vector<Cycle>& cycles) {
  for (const Cycle& c : cycles) {
    if (!is_cycle_of(g.graph(), c) || !is_rainbow(g, c)) return false;
    g = remove_cycle(g, c);
    if (check_goodness(g).verdict != Verdict::Good) return false;
  }
  return true;
}

struct ChildResult {
  bool ok = false;
  std::vector<Cycle> cycles;
  std::vector<CaseTag> tags;
  std::optional<CaseFailure> failure;
};

struct Plan {
  bool ok = true;
  std::vector<std::pair<CaseTag, Cycle>> cycles;
  std::vector<std::string> notes;
  // failure details
  CaseTag attempted = CaseTag::BaseCycle;
  std::optional<Cycle> cycle;
  std::optional<GoodnessReport> report;
  std::string reason;
  std::optional<CaseFailure> inherited;

  static Plan fail(CaseTag tag, std::string reason) {
    Plan p;
    p.ok = false;
    p.attempted = tag;
    p.reason = std::move(reason);
    return p;
  }
};

using Resume = std::function<Plan(const ChildResult&)>;

struct Spawn {
  CaseTag tag;
  EdgeColoredGraph child;
  Resume resume;
  std::vector<std::string> notes;
};

using Action = std::variant<Plan, Spawn>;

struct Frame {
  EdgeColoredGraph graph;
  int depth = 0;
  std::vector<Cycle> emitted;
  std::vector<CaseTag> tags;
  Resume resume;
  CaseTag pending = CaseTag::BaseCycle;
  std::vector<std::string> pending_notes;
};

Cycle walk_single_cycle(const EdgeColoredGraph& g) {
  Vertex s = -1;
  for (std::size_t i = 0; i < g.vertex_count() && s < 0; ++i)
    if (g.degree(static_cast<Vertex>(i)) > 0) s = static_cast<Vertex>(i);
  std::vector<Vertex> seq{s};
  Vertex prev = -1, cur = s;
  while (true) {
    const auto nb = g.neighbors(cur);
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == s) break;
    seq.push_back(next);
    prev = cur;
    cur = next;
  }
  return Cycle::from_vertices(seq);
}

// Lifts a whole child decomposition; the cycle through the bad vertex first.
Resume full_lift(Transform t, CaseTag tag, std::optional<Vertex> bad) {
  return [t = std::move(t), tag, bad](const ChildResult& r) {
    auto lifted = lift_all(t, r.cycles);
    if (!lifted) return Plan::fail(tag, "child decomposition does not lift");
    if (bad)
      std::stable_partition(lifted->begin(), lifted->end(), [&](const Cycle& c) { return c.contains(*bad); });
    Plan p;
    for (Cycle& c : *lifted) p.cycles.emplace_back(tag, std::move(c));
    return p;
  };
}

std::string describe_forest(const XBlockDecomposition& xd) {
  std::string s = std::to_string(xd.x_blocks.size()) + " x-blocks; forest";
  for (const auto& e : xd.forest) s += " " + std::to_string(e.a) + "-" + std::to_string(e.b) + "@" + std::to_string(e.via);
  return s;
}

class Engine {
 public:
  explicit Engine(const DecomposeOptions& opts) : opts_(opts) {}

  DecompositionTrace run(const EdgeColoredGraph& g, const std::optional<Cycle>& first) {
    root_bad_ = bad_vertex_of(g);
    stack_.push_back(Frame{g, 0, {}, {}, {}, {}, {}});
    if (first) {
      Frame& f = stack_.back();
      std::optional<GoodnessReport> report;
      if (!emit(f, CaseTag::AllTypeII, *first, {"prescribed first cycle"}, report)) {
        trace_.failure = CaseFailure{f.graph, CaseTag::AllTypeII, *first, report ? *report : check_goodness(f.graph),
                                     "prescribed cycle cannot be removed", SearchStatus::Absent};
        return std::move(trace_);
      }
    }
    std::optional<ChildResult> returned;
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      Plan plan;
      bool have_plan = false;
      if (returned) {
        ChildResult r = std::move(*returned);
        returned.reset();
        Resume resume = std::move(f.resume);
        f.resume = nullptr;
        if (!r.ok) {
          plan = Plan::fail(f.pending, "child decomposition failed");
          plan.inherited = std::move(r.failure);
        } else {
          plan = guarded(f.pending, [&] { return resume(r); });
          if (plan.ok && !f.pending_notes.empty() && !plan.cycles.empty())
            plan.notes.insert(plan.notes.begin(), f.pending_notes.begin(), f.pending_notes.end());
        }
        have_plan = true;
      } else if (f.graph.edge_count() == 0) {
        ChildResult done{true, std::move(f.emitted), std::move(f.tags), std::nullopt};
        stack_.pop_back();
        if (stack_.empty()) return finish(std::move(done));
        returned = std::move(done);
        continue;
      } else {
        Action a;
        try {
          a = dispatch(f);
        } catch (const Error& e) {
          a = Plan::fail(CaseTag::Fallback, std::string("dispatch: ") + e.what());
        }
        if (auto* sp = std::get_if<Spawn>(&a)) {
          if (sp->child.edge_count() >= f.graph.edge_count()) {
            plan = Plan::fail(sp->tag, "reduction did not shrink the graph");
          } else {
            GoodnessReport cr = check_goodness(sp->child);
            if (!is_good_or_almost_good(cr)) {
              plan = Plan::fail(sp->tag, "reduced graph is not good");
              plan.report = cr;
            } else {
              f.resume = std::move(sp->resume);
              f.pending = sp->tag;
              f.pending_notes = std::move(sp->notes);
              Frame child{std::move(sp->child), f.depth + 1, {}, {}, {}, {}, {}};
              stack_.push_back(std::move(child));  // invalidates f
              continue;
            }
          }
        } else {
          plan = std::move(std::get<Plan>(a));
        }
        have_plan = true;
      }
      if (have_plan && !apply(stack_.back(), std::move(plan))) {
        ChildResult failed;
        failed.failure = std::move(pending_failure_);
        pending_failure_.reset();
        stack_.pop_back();
        if (stack_.empty()) {
          trace_.failure = std::move(failed.failure);
          return std::move(trace_);
        }
        returned = std::move(failed);
      }
    }
    return std::move(trace_);
  }

 private:
  template <class F>
  Plan guarded(CaseTag tag, F&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      return Plan::fail(tag, e.what());
    }
  }

  DecompositionTrace finish(ChildResult done) {
    trace_.success = true;
    std::vector<std::size_t> order(done.cycles.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (root_bad_)
      std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return done.cycles[i].contains(*root_bad_); });
    for (std::size_t i : order) {
      trace_.cycles.push_back(done.cycles[i]);
      trace_.cycle_tags.push_back(done.tags[i]);
    }
    return std::move(trace_);
  }

  // Checks and performs one removal. On rejection `report` holds the
  // remainder's report when one was computed.
  bool emit(Frame& f, CaseTag tag, const Cycle& c, std::vector<std::string> notes,
            std::optional<GoodnessReport>& report) {
    if (!is_cycle_of(f.graph.graph(), c)) return false;
    const auto bad = bad_vertex_of(f.graph);
    const bool through_bad = bad && c.contains(*bad);
    if (through_bad ? !is_almost_rainbow_at(f.graph, c, *bad) : !is_rainbow(f.graph, c)) return false;
    EdgeColoredGraph rest = remove_cycle(f.graph, c);
    GoodnessReport r = check_goodness(rest);
    const bool ok = r.verdict == Verdict::Good ? (!bad || through_bad)
                                               : (r.verdict == Verdict::AlmostGood && bad && !through_bad &&
                                                  r.bad_vertex == bad);
    if (!ok) {
      report = std::move(r);
      return false;
    }
    f.graph = std::move(rest);
    f.emitted.push_back(c);
    f.tags.push_back(tag);
    ++trace_.case_counts[tag];
    trace_.steps.push_back(TraceStep{f.depth, tag, c, std::move(r), std::move(notes)});
    return true;
  }

  bool apply(Frame& f, Plan plan) {
    if (plan.ok) {
      for (std::size_t i = 0; i < plan.cycles.size(); ++i) {
        auto& [tag, c] = plan.cycles[i];
        std::optional<GoodnessReport> report;
        if (!emit(f, tag, c, i == 0 ? plan.notes : std::vector<std::string>{}, report))
          return recover(f, tag, c, std::move(report),
                         "cycle " + std::to_string(i + 1) + " of " + std::to_string(plan.cycles.size()) +
                             " failed verification",
                         std::nullopt);
      }
      return true;
    }
    return recover(f, plan.attempted, plan.cycle, std::move(plan.report), plan.reason, std::move(plan.inherited));
  }

  bool recover(Frame& f, CaseTag attempted, std::optional<Cycle> cycle, std::optional<GoodnessReport> report,
               const std::string& reason, std::optional<CaseFailure> inherited) {
    std::string flag = "depth " + std::to_string(f.depth) + " " + to_string(attempted) + ": " + reason;
    if (cycle) flag += " " + to_string(*cycle);
    if (report && !report->violations.empty()) {
      const Violation& v = report->violations.front();
      flag += " (" + to_string(report->verdict) + ", condition " + std::to_string(v.condition) + ": " + v.detail + ")";
    }
    FallbackResult fb = fallback_search(f.graph, opts_.fallback);
    if (fb.status == SearchStatus::Found) {
      std::optional<GoodnessReport> ignored;
      if (emit(f, CaseTag::Fallback, *fb.cycle, {"fallback after: " + reason}, ignored)) {
        trace_.flags.push_back(flag + "; fallback used " + to_string(*fb.cycle));
        return true;
      }
    }
    trace_.flags.push_back(flag + "; fallback " + to_string(fb.status));
    if (inherited) {
      pending_failure_ = std::move(inherited);
    } else {
      pending_failure_ = CaseFailure{f.graph, attempted, std::move(cycle),
                                     report ? std::move(*report) : check_goodness(f.graph), reason, fb.status};
    }
    return false;
  }

  Action dispatch(const Frame& f) {
    const EdgeColoredGraph& g = f.graph;
    const Graph& raw = g.graph();
    const auto comp = connected_components(raw);
    Vertex low = -1;
    bool split = false;
    for (std::size_t i = 0; i < raw.vertex_count(); ++i) {
      if (raw.degree(static_cast<Vertex>(i)) == 0) continue;
      if (low < 0) low = static_cast<Vertex>(i);
      else if (comp[i] != comp[static_cast<std::size_t>(low)]) split = true;
    }
    if (split) {
      std::vector<Edge> keep;
      for (const Edge& e : raw.edges())
        if (comp[static_cast<std::size_t>(e.u)] == comp[static_cast<std::size_t>(low)]) keep.push_back(e);
      auto r = restrict_to_edges(g, keep);
      Transform t = std::move(r.transform);
      Resume resume = [t](const ChildResult& cr) {
        Plan p;
        for (std::size_t i = 0; i < cr.cycles.size(); ++i) {
          std::vector<Vertex> seq;
          for (Vertex u : cr.cycles[i].vertices()) seq.push_back(t.to_parent[u]);
          p.cycles.emplace_back(cr.tags[i], Cycle::from_vertices(seq));
        }
        return p;
      };
      return Spawn{CaseTag::BaseCycle, std::move(r.child), std::move(resume), {"component of vertex " + std::to_string(low)}};
    }

    bool all_deg2 = true;
    for (std::size_t i = 0; i < raw.vertex_count(); ++i)
      if (raw.degree(static_cast<Vertex>(i)) != 0 && raw.degree(static_cast<Vertex>(i)) != 2) all_deg2 = false;
    if (all_deg2) {
      Plan p;
      p.cycles.emplace_back(CaseTag::BaseCycle, walk_single_cycle(g));
      return p;
    }

    if (auto tri = find_rainbow_triangle(g)) {
      Plan p;
      p.cycles.emplace_back(CaseTag::RainbowTriangle, *tri);
      return p;
    }

    const auto bad = bad_vertex_of(g);
    if (bad) {
      CasePattern p = match_case1(g);
      Reduction r = p.tag == CaseTag::Case1_1 ? case1_1(g, p) : case1_2(g, p);
      return Spawn{p.tag, std::move(r.child), full_lift(std::move(r.transform), p.tag, bad), {}};
    }

    bool all_type2 = true;
    for (std::size_t i = 0; i < raw.vertex_count(); ++i)
      if (raw.degree(static_cast<Vertex>(i)) == 2) all_type2 = false;
    if (all_type2) {
      Plan p;
      p.cycles.emplace_back(CaseTag::AllTypeII, find_cycle_all_type2(g));
      return p;
    }

    if (longest_singular_path(g).length >= 3) {
      CasePattern p = match_case2_1(g);
      Reduction r = case2_1(g, p);
      return Spawn{p.tag, std::move(r.child), full_lift(std::move(r.transform), p.tag, std::nullopt), {}};
    }

    CasePattern p = match_case2_2(g);
    switch (p.tag) {
      case CaseTag::Case2_2_2a: {
        const Cycle direct = case2_2_2a_direct(p);
        if (is_rainbow(g, direct) && check_goodness(remove_cycle(g, direct)).verdict == Verdict::Good) {
          Plan plan;
          plan.cycles.emplace_back(p.tag, direct);
          plan.notes = p.normalizations;
          plan.notes.push_back("direct cycle");
          return plan;
        }
        Reduction r = case2_2_2a_rewire(g, p);
        auto notes = p.normalizations;
        notes.push_back("rewired");
        return Spawn{p.tag, std::move(r.child), full_lift(std::move(r.transform), p.tag, std::nullopt), notes};
      }
      case CaseTag::Case2_2_2b:
      case CaseTag::Case2_2_2c: {
        Reduction r = p.tag == CaseTag::Case2_2_2b ? case2_2_2b(g, p) : case2_2_2c(g, p);
        return Spawn{p.tag, std::move(r.child), full_lift(std::move(r.transform), p.tag, std::nullopt),
                     p.normalizations};
      }
      case CaseTag::Case2_2_2d: {
        Plan plan;
        plan.cycles.emplace_back(p.tag, case2_2_2d_direct(p));
        plan.notes = p.normalizations;
        return plan;
      }
      default:
        return dispatch_2_2_1(g, std::move(p));
    }
  }

  Action dispatch_2_2_1(const EdgeColoredGraph& g, CasePattern p) {
    auto r = std::make_shared<Reduction>(case2_2_1_merge(g, p));
    const GoodnessReport rep = check_goodness(r->child);
    if (rep.verdict == Verdict::Good) {
      p.tag = CaseTag::Case2_2_1a;
      auto parent = std::make_shared<EdgeColoredGraph>(g);
      auto resume = [p, r, parent](const ChildResult& cr) {
        std::string why;
        auto cycles = recombine_case2_2_1a(p, *r, cr.cycles, &why);
        if (!cycles) return Plan::fail(CaseTag::Case2_2_1a, "recombination: " + why);
        Plan plan;
        const Vertex cx = r->transform.to_child[*p.x1], cv = r->transform.to_child[*p.v];
        const bool avoiding = std::any_of(cr.cycles.begin(), cr.cycles.end(),
                                          [&](const Cycle& c) { return !c.contains(cx) && !c.contains(cv); });
        if (avoiding) {
          // One avoiding cycle only; the rest of the merged decomposition is stale once it is gone.
          plan.cycles.emplace_back(CaseTag::Case2_2_1a, cycles->front());
          plan.notes.push_back("cycle avoiding v and x");
          return plan;
        }
        if (!removals_stay_good(*parent, *cycles)) {
          auto other = recombine_case2_2_1a(p, *r, cr.cycles, &why, 1);
          if (other && *other != *cycles && removals_stay_good(*parent, *other)) {
            cycles = std::move(other);
            plan.notes.push_back("second cycle through x used");
          }
        }
        for (Cycle& c : *cycles) plan.cycles.emplace_back(CaseTag::Case2_2_1a, std::move(c));
        return plan;
      };
      return Spawn{CaseTag::Case2_2_1a, r->child, resume, p.normalizations};
    }
    bool only_x = rep.verdict == Verdict::NotGood && !rep.violations.empty();
    for (const Violation& v : rep.violations)
      if (v.condition != 6) only_x = false;
    if (!only_x) {
      Plan plan = Plan::fail(CaseTag::Case2_2_1a, "merged graph is neither good nor only Type X");
      plan.report = rep;
      return plan;
    }
    p.tag = CaseTag::Case2_2_1b;
    const Vertex cx = r->transform.to_child[*p.x1], cv = r->transform.to_child[*p.v];
    const XBlockDecomposition xd = x_block_decomposition(r->child);
    const std::size_t s = xd.x_blocks.size();
    auto block_of = [&](Vertex u) -> std::vector<std::size_t> {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < s; ++i)
        if (std::binary_search(xd.x_blocks[i].begin(), xd.x_blocks[i].end(), u)) out.push_back(i);
      return out;
    };
    std::vector<int> deg(s, 0);
    for (const auto& e : xd.forest) {
      ++deg[e.a];
      ++deg[e.b];
    }
    const auto bx = block_of(cx), bv = block_of(cv);
    bool path = xd.forest.size() + 1 == s && bx.size() == 1 && bv.size() == 1 && bx[0] != bv[0];
    for (int d : deg) path = path && d <= 2;
    if (path) path = deg[bx[0]] == 1 && deg[bv[0]] == 1;
    if (!path) {
      Plan plan = Plan::fail(CaseTag::Case2_2_1b, "x-block forest is not a path from x to v: " + describe_forest(xd));
      plan.report = rep;
      return plan;
    }
    const std::size_t g1 = bx[0];
    Vertex t = -1;
    for (const auto& e : xd.forest)
      if (e.a == g1 || e.b == g1) t = e.via;
    if (t == cx) return Plan::fail(CaseTag::Case2_2_1b, "merged vertex is the Type X cut vertex");
    auto restricted = restrict_to_edges(r->child, xd.x_block_edges[g1]);
    auto rt = std::make_shared<Transform>(std::move(restricted.transform));
    const Vertex t_in = rt->to_child[t];
    auto parent = std::make_shared<EdgeColoredGraph>(g);
    auto resume = [p, r, rt, t_in, parent](const ChildResult& cr) {
      auto cands = candidates_case2_2_1b(p, *r, *rt, cr.cycles, t_in);
      for (std::size_t i = 0; i < cands.size(); ++i) {
        const Cycle& c = cands[i];
        if (!is_rainbow(*parent, c)) continue;
        if (check_goodness(remove_cycle(*parent, c)).verdict != Verdict::Good) continue;
        Plan plan;
        plan.cycles.emplace_back(CaseTag::Case2_2_1b, c);
        plan.notes.push_back("t = " + std::to_string(rt->to_parent[t_in]) + ", candidate " + std::to_string(i + 1) +
                             " of " + std::to_string(cands.size()));
        return plan;
      }
      return Plan::fail(CaseTag::Case2_2_1b, std::to_string(cands.size()) + " candidate cycles, none acceptable");
    };
    return Spawn{CaseTag::Case2_2_1b, std::move(restricted.child), resume, p.normalizations};
  }

  DecomposeOptions opts_;
  DecompositionTrace trace_;
  std::vector<Frame> stack_;
  std::optional<CaseFailure> pending_failure_;
  std::optional<Vertex> root_bad_;
};

void require_good(const EdgeColoredGraph& g) {
  const GoodnessReport r = check_goodness(g);
  if (is_good_or_almost_good(r)) return;
  std::string what = "graph is not good or almost-good";
  if (!r.violations.empty()) what += ": condition " + std::to_string(r.violations.front().condition) + " " +
                                     r.violations.front().detail;
  throw PreconditionError(what);
}

void require_cubic_bridgeless(const Graph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.degree(static_cast<Vertex>(i)) != 3)
      throw PreconditionError("vertex " + std::to_string(i) + " has degree " + std::to_string(g.degree(static_cast<Vertex>(i))));
  const auto bridges = find_bridges(g);
  if (!bridges.empty()) throw PreconditionError("graph has bridge " + to_string(bridges.front()));
}

CdcResult finish_cover(const Graph& g, const ColoredLineGraph& lg, DecompositionTrace trace) {
  CdcResult out{std::move(trace), std::nullopt};
  if (!out.trace.success) return out;
  CycleDoubleCover cover = cover_from_decomposition(lg, out.trace.cycles);
  if (verify_cdc(g, cover).accepted) out.cover = std::move(cover);
  else out.trace.flags.push_back("lifted cover failed verification");
  return out;
}

}  // namespace

DecompositionTrace decompose(const EdgeColoredGraph& g, const DecomposeOptions& opts) {
  require_good(g);
  return Engine(opts).run(g, std::nullopt);
}

DecompositionTrace decompose_goddyn(const ColoredLineGraph& lg, const Cycle& first, const DecomposeOptions& opts) {
  require_good(lg.lg);
  return Engine(opts).run(lg.lg, project_cycle(lg, first));
}

CdcResult cycle_double_cover(const Graph& g, const DecomposeOptions& opts) {
  require_cubic_bridgeless(g);
  const ColoredLineGraph lg = build_line_graph(g);
  return finish_cover(g, lg, decompose(lg.lg, opts));
}

CdcResult cycle_double_cover_containing(const Graph& g, const Cycle& first, const DecomposeOptions& opts) {
  require_cubic_bridgeless(g);
  if (!is_cycle_of(g, first)) throw PreconditionError("prescribed cycle is not a cycle of the graph");
  const ColoredLineGraph lg = build_line_graph(g);
  CdcResult out = finish_cover(g, lg, decompose_goddyn(lg, first, opts));
  if (out.cover &&
      std::find(out.cover->cycles.begin(), out.cover->cycles.end(), first) == out.cover->cycles.end())
    out.trace.flags.push_back("prescribed cycle missing from cover");
  return out;
}

}  // namespace cdc
