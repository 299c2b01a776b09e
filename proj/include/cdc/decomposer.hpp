#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdc/colored_graph.hpp"
#include "cdc/line_graph.hpp"
#include "cdc/oracle.hpp"
#include "cdc/transform.hpp"

namespace cdc {

enum class CaseTag {
  BaseCycle,
  RainbowTriangle,
  AllTypeII,
  Case1_1,
  Case1_2,
  Case2_1,
  Case2_2_1a,
  Case2_2_1b,
  Case2_2_2a,
  Case2_2_2b,
  Case2_2_2c,
  Case2_2_2d,
  Fallback,
};

std::string to_string(CaseTag t);

// Local labels of the active case. For Case 1, v is the bad vertex with
// neighbors x1 < x2 and alpha = c(v x1) = c(v x2). For Case 2.2, v is a
// Type I vertex between Type II vertices x1 and x2 with alpha = c(v x1),
// beta = c(v x2), x1's other edges being y1 (alpha) and w1, z1 (gamma), and
// x2's being y2 (beta) and w2, z2 (delta).
struct CasePattern {
  CaseTag tag = CaseTag::BaseCycle;
  std::optional<Vertex> v, x1, x2, y1, y2, w1, w2, z1, z2;
  std::optional<Vertex> v0, v1, v2, v3;  // singular path for Case 2.1
  std::optional<Color> alpha, beta, gamma, delta;
  std::vector<std::string> normalizations;
};

class PatternError : public Error {
 public:
  using Error::Error;
};

struct Reduction {
  Transform transform;
  EdgeColoredGraph child;
};

// Pattern matching. Throw PatternError when the graph is not in the case.
CasePattern match_case1(const EdgeColoredGraph& g);
CasePattern match_case2_1(const EdgeColoredGraph& g);
CasePattern match_case2_2(const EdgeColoredGraph& g);

Reduction case1_1(const EdgeColoredGraph& g, const CasePattern& p);
Reduction case1_2(const EdgeColoredGraph& g, const CasePattern& p);
Reduction case2_1(const EdgeColoredGraph& g, const CasePattern& p);
// The merged graph G' shared by both 2.2.1 subcases.
Reduction case2_2_1_merge(const EdgeColoredGraph& g, const CasePattern& p);
Reduction case2_2_2a_rewire(const EdgeColoredGraph& g, const CasePattern& p);
Reduction case2_2_2b(const EdgeColoredGraph& g, const CasePattern& p);
Reduction case2_2_2c(const EdgeColoredGraph& g, const CasePattern& p);
Cycle case2_2_2a_direct(const CasePattern& p);
Cycle case2_2_2d_direct(const CasePattern& p);

// Rebuilds G-cycles from a decomposition of the 2.2.1 merged graph. Child
// cycles avoiding v and the merged vertex come first, unchanged; then the
// recombination of the cycles through v or x. When three cycles meet v or x
// only one G-cycle is produced, built from the `x_choice`-th cycle through x,
// and the caller continues from there. Returns nullopt (with `why` set) for
// shapes outside the two handled ones.
std::optional<std::vector<Cycle>> recombine_case2_2_1a(const CasePattern& p, const Reduction& r,
                                                       const std::vector<Cycle>& child_cycles, std::string* why,
                                                       std::size_t x_choice = 0);

// Candidate cycles through v for 2.2.1(b) from the decomposition of the end
// x-block; `restrict` maps that x-block into the merged graph.
std::vector<Cycle> candidates_case2_2_1b(const CasePattern& p, const Reduction& merged, const Transform& restrict,
                                         const std::vector<Cycle>& block_cycles, Vertex t_in_block);

Cycle find_cycle_all_type2(const EdgeColoredGraph& g);

struct FallbackOptions {
  std::uint64_t max_nodes = 2'000'000;
  std::size_t max_cycle_length = 64;  // applies only when the graph has >= 64 edges
};

struct FallbackResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<Cycle> cycle;
  std::uint64_t nodes = 0;
};

// Shortest-first search (ties lexicographic) for a rainbow cycle, or an
// almost-rainbow one through the bad vertex, whose removal leaves a good or
// almost-good graph with the same bad vertex.
FallbackResult fallback_search(const EdgeColoredGraph& g, const FallbackOptions& opts = {});

struct TraceStep {
  int depth = 0;
  CaseTag tag = CaseTag::BaseCycle;
  Cycle cycle;
  GoodnessReport after;
  std::vector<std::string> notes;
};

struct CaseFailure {
  EdgeColoredGraph graph;
  CaseTag attempted = CaseTag::BaseCycle;
  std::optional<Cycle> cycle;
  GoodnessReport report;
  std::string reason;
  SearchStatus fallback = SearchStatus::Absent;
};

struct DecompositionTrace {
  std::vector<TraceStep> steps;  // every removal at every depth, in order
  std::vector<std::string> flags;
  bool success = false;
  std::vector<Cycle> cycles;  // top-level removals; the almost-rainbow one first
  std::vector<CaseTag> cycle_tags;
  std::optional<CaseFailure> failure;
  std::map<CaseTag, int> case_counts;
};

struct DecomposeOptions {
  FallbackOptions fallback;
};

// Throws PreconditionError unless g is good or almost-good.
DecompositionTrace decompose(const EdgeColoredGraph& g, const DecomposeOptions& opts = {});

// Removes project_cycle(first) first, then decomposes the rest.
DecompositionTrace decompose_goddyn(const ColoredLineGraph& lg, const Cycle& first, const DecomposeOptions& opts = {});

// Convenience wrappers around the line graph.
struct CdcResult {
  DecompositionTrace trace;
  std::optional<CycleDoubleCover> cover;
};

CdcResult cycle_double_cover(const Graph& g, const DecomposeOptions& opts = {});
CdcResult cycle_double_cover_containing(const Graph& g, const Cycle& first, const DecomposeOptions& opts = {});

}  // namespace cdc
