#pragma once

// Independent helpers for the test suites. Nothing here calls into the code under test
// beyond the Graph container itself.

#include <cstdint>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor::testing {

// Largest component of g[s], by plain flood fill.
inline std::size_t flood_max_component(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0), seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) in[v] = 1;
  std::size_t best = 0;
  for (Vertex root : s) {
    if (seen[root]) continue;
    std::size_t size = 0;
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(u))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    best = std::max(best, size);
  }
  return best;
}

// Every split of `h` (as the A side) whose sides have components of size <= bound.
inline std::vector<std::vector<Vertex>> feasible_splits(const Graph& g, const std::vector<Vertex>& h, std::size_t bound) {
  std::vector<std::vector<Vertex>> out;
  const std::size_t k = h.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Vertex> a, b;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i & 1) ? a : b).push_back(h[i]);
    if (flood_max_component(g, a) <= bound && flood_max_component(g, b) <= bound) out.push_back(a);
  }
  return out;
}

// Minimum size of a connected vertex set containing `terminals`, by enumeration of all subsets.
inline int brute_min_connector_size(const Graph& g, const std::vector<Vertex>& terminals) {
  const int n = g.order();
  int best = -1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool covers = true;
    for (Vertex t : terminals) covers = covers && (mask >> t & 1);
    if (!covers) continue;
    int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) members.push_back(v);
    if (flood_max_component(g, members) == members.size()) best = size;
  }
  return best;
}

}  // namespace oddcolor::testing
