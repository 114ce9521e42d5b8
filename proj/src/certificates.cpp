#include "oddcolor/certificates.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "oddcolor/errors.hpp"

namespace oddcolor {

namespace {

// Smallest vertex of `from` with a neighbour in `into`, or -1.
Vertex first_touching(const Graph& g, const VertexSet& from, const std::vector<char>& into) {
  for (Vertex y : from)
    for (Vertex w : g.neighbors(y))
      if (into[w]) return y;
  return -1;
}

Vertex first_neighbor_in(const Graph& g, Vertex y, const VertexSet& side) {
  for (Vertex w : g.neighbors(y))
    if (side.contains(w)) return w;
  return -1;
}

}  // namespace

OddExpansionCertificate extract_certificate(const Graph& g, int t, const StuckState& stuck) {
  if (t < 3) throw PreconditionError("extract_certificate: t must be at least 3");
  if (stuck.adjacent_parts.size() < static_cast<std::size_t>(t - 1)) {
    throw PreconditionError("extract_certificate: stuck component touches only " +
                            std::to_string(stuck.adjacent_parts.size()) + " parts, need " + std::to_string(t - 1));
  }
  std::vector<const Part*> chosen;
  for (int i = 0; i < t - 1; ++i) chosen.push_back(&stuck.adjacent_parts[static_cast<std::size_t>(i)]);

  OddExpansionCertificate cert;
  cert.t = t;
  for (const Part* part : chosen) {
    const Part& p = *part;
    cert.trees.push_back(spanning_tree(g, p.vertices, [&p](Vertex u, Vertex v) {
      return p.side_a.contains(u) != p.side_a.contains(v);
    }));
    for (Vertex v : p.side_a) cert.coloring[v] = 1;
    for (Vertex v : p.side_b) cert.coloring[v] = 2;
  }

  TreeSubgraph last = spanning_tree(g, stuck.component);
  {
    std::map<Vertex, std::vector<Vertex>> tree_adj;
    for (const auto& [u, v] : last.edges) {
      tree_adj[u].push_back(v);
      tree_adj[v].push_back(u);
    }
    std::deque<Vertex> queue{last.vertices.min()};
    cert.coloring[last.vertices.min()] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : tree_adj[u]) {
        if (cert.coloring.count(w)) continue;
        cert.coloring[w] = 3 - cert.coloring[u];
        queue.push_back(w);
      }
    }
  }
  cert.trees.push_back(std::move(last));

  // For trees s < r with s a part: y is the first vertex of tree r touching part s; the part's
  // invariant gives y neighbours on both of its sides, one of which matches y's colour.
  for (int s = 0; s < t - 1; ++s) {
    const Part& lower = *chosen[static_cast<std::size_t>(s)];
    const auto lower_mask = membership_mask(lower.vertices, g.order());
    for (int r = s + 1; r < t; ++r) {
      const VertexSet& upper = cert.trees[static_cast<std::size_t>(r)].vertices;
      Vertex y = first_touching(g, upper, lower_mask);
      if (y < 0) {
        throw PreconditionError("extract_certificate: tree " + std::to_string(r) + " does not touch part " +
                                std::to_string(lower.index));
      }
      Vertex a = first_neighbor_in(g, y, lower.side_a);
      Vertex b = first_neighbor_in(g, y, lower.side_b);
      if (a < 0 || b < 0) {
        throw InvariantError("extract_certificate: vertex " + std::to_string(y) + " sees only one side of part " +
                             std::to_string(lower.index));
      }
      Vertex x = cert.coloring.at(a) == cert.coloring.at(y) ? a : b;
      cert.joins.push_back(Join{s, r, Edge{x, y}});
    }
  }
  return cert;
}

Verdict verify_certificate(const Graph& g, const OddExpansionCertificate& cert) {
  auto reject = [](std::string why) { return Verdict{false, std::move(why)}; };
  if (cert.t < 1) return reject("t must be positive");
  if (cert.trees.size() != static_cast<std::size_t>(cert.t)) return reject("expected " + std::to_string(cert.t) + " trees");

  std::map<Vertex, int> owner;
  for (std::size_t i = 0; i < cert.trees.size(); ++i) {
    const auto& tree = cert.trees[i];
    const std::string name = "tree " + std::to_string(i);
    if (tree.vertices.empty()) return reject(name + " is empty");
    for (Vertex v : tree.vertices) {
      if (!g.valid(v)) return reject(name + " uses vertex " + std::to_string(v) + " outside the graph");
      if (!owner.emplace(v, static_cast<int>(i)).second) return reject("trees not disjoint");
    }
    if (tree.edges.size() + 1 != tree.vertices.size()) return reject(name + " has the wrong number of edges");

    // Union-find over the tree's own vertices: |V|-1 edges without a cycle means connected.
    std::map<Vertex, Vertex> parent;
    for (Vertex v : tree.vertices) parent[v] = v;
    auto find = [&parent](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& [u, v] : tree.edges) {
      if (!tree.vertices.contains(u) || !tree.vertices.contains(v)) return reject(name + " has an edge leaving it");
      if (!g.adjacent(u, v)) return reject(name + " uses a non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      Vertex ru = find(u), rv = find(v);
      if (ru == rv) return reject(name + " contains a cycle");
      parent[ru] = rv;
    }
  }

  for (const auto& [v, colour] : cert.coloring) {
    if (!owner.count(v)) return reject("coloring covers non-tree vertex " + std::to_string(v));
    if (colour != 1 && colour != 2) return reject("color of vertex " + std::to_string(v) + " is not 1 or 2");
  }
  for (const auto& [v, tree] : owner) {
    if (!cert.coloring.count(v)) return reject("vertex " + std::to_string(v) + " is uncolored");
  }
  for (std::size_t i = 0; i < cert.trees.size(); ++i)
    for (const auto& [u, v] : cert.trees[i].edges)
      if (cert.coloring.at(u) == cert.coloring.at(v))
        return reject("tree " + std::to_string(i) + " is not properly colored");

  std::set<std::pair<int, int>> joined;
  for (const Join& j : cert.joins) {
    if (j.tree_a < 0 || j.tree_b < 0 || j.tree_a >= cert.t || j.tree_b >= cert.t || j.tree_a == j.tree_b)
      return reject("join names an invalid tree pair");
    auto key = std::minmax(j.tree_a, j.tree_b);
    if (!joined.insert(key).second) return reject("more than one join for a pair of trees");
    auto [x, y] = j.edge;
    if (!g.adjacent(x, y)) return reject("join edge (" + std::to_string(x) + "," + std::to_string(y) + ") not in graph");
    auto ox = owner.find(x), oy = owner.find(y);
    if (ox == owner.end() || oy == owner.end()) return reject("join edge leaves the trees");
    const bool forward = ox->second == j.tree_a && oy->second == j.tree_b;
    const bool backward = ox->second == j.tree_b && oy->second == j.tree_a;
    if (!forward && !backward) return reject("join edge does not connect its two trees");
    if (cert.coloring.at(x) != cert.coloring.at(y)) return reject("join edge not monochromatic");
  }
  const std::size_t pairs = static_cast<std::size_t>(cert.t) * static_cast<std::size_t>(cert.t - 1) / 2;
  if (joined.size() != pairs) return reject("some pair of trees has no join");
  return Verdict{true, {}};
}

OddExpansionCertificate relabel(const OddExpansionCertificate& cert, std::span<const Vertex> to_host) {
  auto map = [&to_host](Vertex v) { return to_host[static_cast<std::size_t>(v)]; };
  OddExpansionCertificate out;
  out.t = cert.t;
  for (const auto& tree : cert.trees) {
    TreeSubgraph mapped;
    std::vector<Vertex> vs;
    for (Vertex v : tree.vertices) vs.push_back(map(v));
    mapped.vertices = VertexSet(std::move(vs));
    for (const auto& [u, v] : tree.edges) mapped.edges.push_back(make_edge(map(u), map(v)));
    out.trees.push_back(std::move(mapped));
  }
  for (const auto& [v, colour] : cert.coloring) out.coloring[map(v)] = colour;
  for (const Join& j : cert.joins) out.joins.push_back(Join{j.tree_a, j.tree_b, Edge{map(j.edge.first), map(j.edge.second)}});
  return out;
}

}  // namespace oddcolor
