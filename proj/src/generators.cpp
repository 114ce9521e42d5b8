#include "oddcolor/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "oddcolor/errors.hpp"

namespace oddcolor {

namespace {

// mt19937_64's output sequence is fixed by the standard; the distributions are not.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t pick(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star needs leaves >= 0");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
    edges.push_back(make_edge(i, i + 5));                // spokes
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0, "gnp needs n >= 0");
  require(p >= 0.0 && p <= 1.0, "gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_bipartite(int n, double p, std::uint64_t seed) {
  require(n >= 0, "bipartite needs n >= 0");
  require(p >= 0.0 && p <= 1.0, "bipartite needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  const int left = (n + 1) / 2;
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u)
    for (int v = left; v < n; ++v)
      if (unit(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph connect_components(const Graph& g, std::uint64_t seed) {
  auto comps = connected_components(g);
  if (comps.size() <= 1) return g;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto edges = g.edges();
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    Vertex a = comps[i].members()[pick(rng, comps[i].size())];
    Vertex b = comps[i + 1].members()[pick(rng, comps[i + 1].size())];
    edges.push_back(make_edge(a, b));
  }
  return Graph::from_edges(g.order(), edges);
}

Graph connected_gnp(int n, double p, std::uint64_t seed) { return connect_components(gnp(n, p, seed), seed); }

Graph connected_bipartite(int n, double p, std::uint64_t seed) {
  return connect_components(random_bipartite(n, p, seed), seed);
}

}  // namespace oddcolor
