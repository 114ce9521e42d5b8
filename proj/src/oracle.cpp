#include "oddcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "oddcolor/errors.hpp"

namespace oddcolor {

namespace {

using Mask = std::uint32_t;

bool connected_in(Mask set, const std::vector<Mask>& adj) {
  Mask reached = set & (~set + 1);
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

struct BranchSearch {
  int t = 0;
  std::uint64_t node_limit = 0;
  std::uint64_t nodes = 0;
  std::vector<Mask> sets;        // connected in the bichromatic subgraph, ascending by lowest vertex
  std::vector<Mask> mono_reach;  // vertices one monochromatic edge away from each set
  std::vector<int> chosen;

  bool extend(Mask used, int lowest) {
    if (static_cast<int>(chosen.size()) == t) return true;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const Mask s = sets[i];
      if (std::countr_zero(s) <= lowest || (s & used)) continue;
      if (++nodes > node_limit) throw BudgetExceeded("has_odd_expansion: node limit exceeded");
      bool joins_all = true;
      for (int c : chosen) joins_all = joins_all && (s & mono_reach[static_cast<std::size_t>(c)]);
      if (!joins_all) continue;
      chosen.push_back(static_cast<int>(i));
      if (extend(used | s, std::countr_zero(s))) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

bool has_odd_expansion(const Graph& g, int t, const OracleBudget& budget) {
  const int n = g.order();
  if (t < 1) throw PreconditionError("has_odd_expansion: t must be positive");
  if (n > budget.max_n || n > 20) throw BudgetExceeded("has_odd_expansion: " + std::to_string(n) + " vertices exceed the budget");
  if (t > budget.max_t) throw BudgetExceeded("has_odd_expansion: t = " + std::to_string(t) + " exceeds the budget");
  if (t > n) return false;

  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  const Mask all = (Mask{1} << n) - 1;

  // Swapping the two colours changes nothing, so vertex 0 is always colour 0.
  for (Mask colour = 0; colour < (Mask{1} << (n - 1)); ++colour) {
    const Mask ones = colour << 1;
    std::vector<Mask> bi(static_cast<std::size_t>(n)), mono(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const Mask same = (ones >> v & 1) ? ones : (all & ~ones);
      mono[v] = adj[v] & same;
      bi[v] = adj[v] & ~same;
    }
    BranchSearch search;
    search.t = t;
    search.node_limit = budget.node_limit;
    for (Mask s = 1; s <= all; ++s) {
      if (!connected_in(s, bi)) continue;
      Mask reach = 0;
      for (Mask f = s; f; f &= f - 1) reach |= mono[static_cast<std::size_t>(std::countr_zero(f))];
      search.sets.push_back(s);
      search.mono_reach.push_back(reach);
    }
    std::vector<std::size_t> order(search.sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::countr_zero(search.sets[a]) < std::countr_zero(search.sets[b]);
    });
    std::vector<Mask> sets, reach;
    for (std::size_t i : order) {
      sets.push_back(search.sets[i]);
      reach.push_back(search.mono_reach[i]);
    }
    search.sets = std::move(sets);
    search.mono_reach = std::move(reach);
    if (search.extend(0, -1)) return true;
  }
  return false;
}

VertexSet min_connector_bruteforce(const Graph& g, const VertexSet& terminals, const OracleBudget& budget) {
  const int n = g.order();
  if (n > kMaxConnectorOracleVertices) {
    throw BudgetExceeded("min_connector_bruteforce: " + std::to_string(n) + " vertices exceed " +
                         std::to_string(kMaxConnectorOracleVertices));
  }
  if (terminals.empty()) throw PreconditionError("min_connector_bruteforce: no terminals");
  Mask required = 0;
  for (Vertex v : terminals) {
    if (!g.valid(v)) throw PreconditionError("min_connector_bruteforce: terminal outside graph");
    required |= Mask{1} << v;
  }
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (!terminals.contains(v)) free.push_back(v);

  std::uint64_t nodes = 0;
  const int f = static_cast<int>(free.size());
  for (int extra = 0; extra <= f; ++extra) {
    // Combinations of `extra` free vertices in lexicographic order.
    std::vector<int> pick(static_cast<std::size_t>(extra));
    for (int i = 0; i < extra; ++i) pick[i] = i;
    while (true) {
      if (++nodes > budget.node_limit) throw BudgetExceeded("min_connector_bruteforce: node limit exceeded");
      Mask set = required;
      for (int i : pick) set |= Mask{1} << free[i];
      if (connected_in(set, adj)) {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n; ++v)
          if (set >> v & 1) out.push_back(v);
        return VertexSet(std::move(out));
      }
      int i = extra - 1;
      while (i >= 0 && pick[i] == f - extra + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw PreconditionError("min_connector_bruteforce: terminals lie in different components");
}

}  // namespace oddcolor
