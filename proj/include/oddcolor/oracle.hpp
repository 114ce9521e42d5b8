#pragma once

#include <cstdint>

#include "oddcolor/graph.hpp"

namespace oddcolor {

// Exhaustive ground truth for tiny graphs. Test and CLI use only.

struct OracleBudget {
  int max_n = 9;
  int max_t = 4;
  std::uint64_t node_limit = 200'000'000;
};

inline constexpr int kMaxConnectorOracleVertices = 12;

// Exact test for an odd K_t expansion: some 2-colouring admits t disjoint vertex sets,
// each connected through bichromatic edges, pairwise joined by a monochromatic edge.
bool has_odd_expansion(const Graph& g, int t, const OracleBudget& budget = {});

// Lexicographically first minimum-size superset of `terminals` inducing a connected subgraph.
VertexSet min_connector_bruteforce(const Graph& g, const VertexSet& terminals, const OracleBudget& budget = {});

}  // namespace oddcolor
