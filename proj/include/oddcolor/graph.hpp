#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace oddcolor {

using Vertex = int;

// Unordered vertex pair, stored with first < second once normalized.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(int n);

  bool contains(Vertex v) const;
  void insert(Vertex v);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex min() const { return members_.front(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Rejects out-of-range endpoints, self-loops and duplicate pairs (in either orientation).
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  bool valid(Vertex v) const { return v >= 0 && v < n_; }

  // Normalized edges in ascending order.
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// Connected subgraph given as a vertex set plus a spanning edge set.
struct TreeSubgraph {
  VertexSet vertices;
  std::vector<Edge> edges;
};

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

// Closed walk w0 w1 ... w(k-1) w0 of odd length k.
struct OddClosedWalk {
  std::vector<Vertex> vertices;
};

// Induced subgraph on `keep`, relabeled to 0..|keep|-1 in ascending order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // local id -> host id
};

std::vector<VertexSet> connected_components(const Graph& g);
// Components of g[within], ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

bool is_connected(const Graph& g, const VertexSet& within);

std::size_t induced_edge_count(const Graph& g, const VertexSet& within);

std::variant<Bipartition, OddClosedWalk> bipartition_or_odd_cycle(const Graph& g,
                                                                  const VertexSet& within);

using EdgeFilter = std::function<bool(Vertex, Vertex)>;

// BFS tree of g[within] from its minimum vertex, neighbors in ascending order.
// Only edges accepted by `allowed` are used (all edges when empty).
TreeSubgraph spanning_tree(const Graph& g, const VertexSet& within, const EdgeFilter& allowed = {});

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

std::vector<char> membership_mask(const VertexSet& s, int n);

}  // namespace oddcolor
