#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

// A connected induced subgraph H with a two-sided split of its vertices.
struct Triple {
  VertexSet h;
  VertexSet side_a;
  VertexSet side_b;
  std::size_t cross_edges = 0;  // induced edges with one end in each side
};

// Terminal set S inside a connected vertex set C of the host graph.
// The side bound is ceil(|S| / 2).
class SpannerRequest {
 public:
  SpannerRequest(const Graph& host, VertexSet component, VertexSet terminals);

  const Graph& host() const { return *host_; }
  const VertexSet& component() const { return component_; }
  const VertexSet& terminals() const { return terminals_; }
  int bound() const { return bound_; }

 private:
  const Graph* host_;
  VertexSet component_;
  VertexSet terminals_;
  int bound_;
};

// Record of one refinement run, for instrumentation.
struct SpannerTrace {
  std::vector<std::size_t> cross_history;  // cross-edge count at start and after every move
  std::size_t move_limit = 0;              // induced edge count of the component
  int reconnect_moves = 0;
  int extend_moves = 0;

  int moves() const { return reconnect_moves + extend_moves; }
};

inline constexpr std::size_t kMaxConnectorTerminals = 12;

// Minimum-size vertex set W with terminals ⊆ W ⊆ component and g[W] connected.
// Among minimum sets, the one whose sorted member list is lexicographically smallest.
VertexSet minimum_connector(const Graph& g, const VertexSet& component, const VertexSet& terminals);

// Splits h so that every component of g[side_a] and g[side_b] has at most `bound` vertices.
// Throws InvariantError if no split exists (h was not a minimum connector).
Bipartition bounded_bipartition(const Graph& g, const VertexSet& h, int bound);

// Applies reconnect and extend moves until neither applies.
Triple refine_triple(const SpannerRequest& req, Triple start, SpannerTrace* trace = nullptr);

// minimum_connector, then bounded_bipartition, then refine_triple.
Triple build_spanner(const SpannerRequest& req, SpannerTrace* trace = nullptr);

std::size_t count_cross_edges(const Graph& g, const VertexSet& side_a, const VertexSet& side_b);

// Largest component of g[s].
std::size_t max_component_size(const Graph& g, const VertexSet& s);

// Checks the three spanner properties of `triple` relative to `component`:
// side components bounded, cross subgraph connected, and every outside neighbour of H
// sees both sides. Returns a description of the first failure.
std::optional<std::string> check_triple(const Graph& g, const VertexSet& component, const Triple& triple,
                                        int bound);

}  // namespace oddcolor
