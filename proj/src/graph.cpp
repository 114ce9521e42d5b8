#include "oddcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "oddcolor/errors.hpp"

namespace oddcolor {

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.members_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (int v = 0; v < n; ++v) s.members_[v] = v;
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      throw GraphError("duplicate edge (" + std::to_string(std::min(v, *dup)) + "," +
                       std::to_string(std::max(v, *dup)) + ")");
    }
  }
  g.m_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<char> membership_mask(const VertexSet& s, int n) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw PreconditionError("vertex " + std::to_string(v) + " outside host graph");
    mask[v] = 1;
  }
  return mask;
}

namespace {

std::vector<VertexSet> components_masked(const Graph& g, const std::vector<Vertex>& order,
                                         const std::vector<char>& inside) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root : order) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<char> inside(static_cast<std::size_t>(g.order()), 1);
  return components_masked(g, VertexSet::range(g.order()).members(), inside);
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  return components_masked(g, within.members(), membership_mask(within, g.order()));
}

bool is_connected(const Graph& g, const VertexSet& within) {
  return !within.empty() && connected_components(g, within).size() == 1;
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& within) {
  auto inside = membership_mask(within, g.order());
  std::size_t count = 0;
  for (Vertex u : within)
    for (Vertex w : g.neighbors(u))
      if (u < w && inside[w]) ++count;
  return count;
}

std::variant<Bipartition, OddClosedWalk> bipartition_or_odd_cycle(const Graph& g,
                                                                  const VertexSet& within) {
  if (!is_connected(g, within)) throw PreconditionError("bipartition_or_odd_cycle: vertex set is not connected");
  const int n = g.order();
  auto inside = membership_mask(within, n);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue{within.min()};
  depth[within.min()] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!inside[w]) continue;
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if ((depth[w] & 1) == (depth[u] & 1)) {
        // Same parity across an edge: climb both ends to their lowest common ancestor.
        std::vector<Vertex> left{u}, right{w};
        Vertex a = u, b = w;
        while (depth[a] > depth[b]) left.push_back(a = parent[a]);
        while (depth[b] > depth[a]) right.push_back(b = parent[b]);
        while (a != b) {
          left.push_back(a = parent[a]);
          right.push_back(b = parent[b]);
        }
        right.pop_back();  // common ancestor already ends `left`
        OddClosedWalk walk;
        walk.vertices = left;
        walk.vertices.insert(walk.vertices.end(), right.rbegin(), right.rend());
        // u .. lca .. w, closed by the edge w-u
        return walk;
      }
    }
  }
  std::vector<Vertex> a, b;
  for (Vertex v : within) (depth[v] % 2 == 0 ? a : b).push_back(v);
  return Bipartition{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

TreeSubgraph spanning_tree(const Graph& g, const VertexSet& within, const EdgeFilter& allowed) {
  if (within.empty()) throw PreconditionError("spanning_tree: empty vertex set");
  auto inside = membership_mask(within, g.order());
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  TreeSubgraph tree;
  tree.vertices = within;
  std::deque<Vertex> queue{within.min()};
  seen[within.min()] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!inside[w] || seen[w]) continue;
      if (allowed && !allowed(u, w)) continue;
      seen[w] = 1;
      ++reached;
      tree.edges.push_back(make_edge(u, w));
      queue.push_back(w);
    }
  }
  if (reached != within.size()) throw PreconditionError("spanning_tree: restricted subgraph is disconnected");
  return tree;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  InducedSubgraph out;
  out.to_host = keep.members();
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    if (!g.valid(out.to_host[i])) throw PreconditionError("induced_subgraph: vertex outside host graph");
    local[out.to_host[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex w : g.neighbors(u))
      if (u < w && local[w] >= 0) edges.emplace_back(local[u], local[w]);
  out.graph = Graph::from_edges(static_cast<int>(keep.size()), edges);
  return out;
}

}  // namespace oddcolor
