#pragma once

#include <cstdint>

#include "oddcolor/graph.hpp"

namespace oddcolor {

// Deterministic generators. Randomized ones depend only on (parameters, seed),
// independent of the standard library's distribution implementations.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);
Graph petersen_graph();

// Erdos-Renyi G(n, p).
Graph gnp(int n, double p, std::uint64_t seed);
// Random bipartite graph: vertices 0..ceil(n/2)-1 on one side, each cross pair kept with probability p.
Graph random_bipartite(int n, double p, std::uint64_t seed);

// Adds one edge between each pair of consecutive components (ordered by minimum vertex),
// endpoints chosen at random. Bridges never close a cycle, so bipartiteness is preserved.
Graph connect_components(const Graph& g, std::uint64_t seed);

Graph connected_gnp(int n, double p, std::uint64_t seed);
Graph connected_bipartite(int n, double p, std::uint64_t seed);

}  // namespace oddcolor
