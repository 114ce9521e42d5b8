#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddcolor/decomposer.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

// Part adjacency: position p stands for part index p+1.
struct AuxiliaryGraph {
  std::vector<std::vector<int>> adjacency;  // sorted neighbour positions

  int order() const { return static_cast<int>(adjacency.size()); }
};

struct VertexColor {
  int hue = 0;   // 1..t-1
  int side = 0;  // 1 for A, 2 for B

  friend auto operator<=>(const VertexColor&, const VertexColor&) = default;
};

struct ClusteredColoring {
  int t = 0;
  std::vector<VertexColor> colors;  // one per vertex
};

struct ColoringReport {
  int colors_used = 0;
  int max_component = 0;
  int max_defect = 0;
  std::optional<int> defect_bound;  // ceil((t-4)/2), reported for t >= 4
};

struct ColoringVerdict {
  bool accepted = false;
  ColoringReport report;
  std::string reason;
  VertexSet offending_component;

  explicit operator bool() const { return accepted; }
};

// Throws InvariantError if some part has more than t-2 earlier neighbours.
AuxiliaryGraph build_auxiliary(const Graph& g, const Decomposition& d);

// Greedy in index order with the smallest free hue from 1..t-1. Position p holds part p+1's hue.
std::vector<int> color_parts(const AuxiliaryGraph& aux, int t);

// Vertex x in part i gets (hue of i, 1 if x is in A_i else 2).
ClusteredColoring product_coloring(const Graph& g, const Decomposition& d, std::span<const int> part_hues);

// Recomputes monochromatic components from scratch; accepts iff at most 2t-2 colours
// are used and no monochromatic component exceeds ceil((t-2)/2) vertices.
ColoringVerdict verify_coloring(const Graph& g, const ClusteredColoring& coloring, int t);

}  // namespace oddcolor
