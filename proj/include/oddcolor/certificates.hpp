#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "oddcolor/decomposer.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

// The designated edge joining trees `tree_a` and `tree_b` (0-based positions in `trees`).
struct Join {
  int tree_a = 0;
  int tree_b = 0;
  Edge edge;  // edge.first lies in tree_a, edge.second in tree_b
};

// t disjoint trees, a 2-colouring proper on every tree, and one monochromatic
// edge per pair of trees. Witnesses an odd K_t minor.
struct OddExpansionCertificate {
  int t = 0;
  std::vector<TreeSubgraph> trees;
  std::map<Vertex, int> coloring;  // tree vertex -> 1 or 2
  std::vector<Join> joins;
};

struct Verdict {
  bool accepted = false;
  std::string reason;  // first violated clause when rejected

  explicit operator bool() const { return accepted; }
};

// Builds the certificate from a stuck decomposition using the t-1 lowest-index
// adjacent parts and a spanning tree of the stuck component.
OddExpansionCertificate extract_certificate(const Graph& g, int t, const StuckState& stuck);

// Total check of every certificate clause against g.
Verdict verify_certificate(const Graph& g, const OddExpansionCertificate& cert);

// Maps every vertex id through `to_host` (local id -> host id).
OddExpansionCertificate relabel(const OddExpansionCertificate& cert, std::span<const Vertex> to_host);

}  // namespace oddcolor
