#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdc/colored_graph.hpp"
#include "cdc/graph.hpp"
#include "cdc/line_graph.hpp"

namespace cdc {

enum class SearchStatus { Found, Absent, Indeterminate };

std::string to_string(SearchStatus s);

// Zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds max_time{0};
};

// All simple cycles of length <= max_len, canonical and sorted.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<std::size_t> max_len = std::nullopt);

enum class BranchRule { LowestIndex, MostConstrained };

struct CdcSearch {
  SearchStatus status = SearchStatus::Absent;
  std::optional<CycleDoubleCover> cover;
  std::uint64_t nodes = 0;
};

CdcSearch brute_force_cdc(const Graph& g, const Budget& budget = {}, BranchRule rule = BranchRule::LowestIndex);

struct RainbowSearch {
  SearchStatus status = SearchStatus::Absent;
  std::vector<Cycle> cycles;  // almost-rainbow member first, if any
  std::uint64_t nodes = 0;
};

// Partition of E(g) into rainbow cycles; if g has a bad vertex (degree 2,
// one color) exactly one member is almost-rainbow through it.
RainbowSearch brute_force_rainbow_decomposition(const EdgeColoredGraph& g, const Budget& budget = {});

struct GeneratorConfig {
  std::size_t vertex_count = 4;
  std::uint64_t seed = 0;
  std::size_t max_rejections = 1'000'000;
};

// Pairing model with rejection of loops, multi-edges, disconnection and
// bridges. Throws PreconditionError on odd or too small n and Error when
// rejections run out.
Graph random_cubic_bridgeless(const GeneratorConfig& cfg);

bool are_isomorphic(const Graph& a, const Graph& b);

// Connected cubic bridgeless graphs on n vertices, one per isomorphism class,
// by exhaustive construction.
std::vector<Graph> enumerate_cubic_bridgeless(std::size_t n);

// Condition-by-condition goodness evaluation from the raw edge list, using
// block splits instead of the component test for Type X.
GoodnessReport brute_force_goodness(const EdgeColoredGraph& g);

// Degree-4 cut vertices admitting a split of their incident blocks into two
// groups with two same-colored edges on each side.
std::vector<Vertex> brute_force_type_x(const EdgeColoredGraph& g);

}  // namespace cdc
