#include "oddcolor/parity_spanner.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <functional>
#include <queue>

#include "oddcolor/errors.hpp"

namespace oddcolor {

SpannerRequest::SpannerRequest(const Graph& host, VertexSet component, VertexSet terminals)
    : host_(&host), component_(std::move(component)), terminals_(std::move(terminals)) {
  if (terminals_.empty()) throw PreconditionError("spanner request needs at least one terminal");
  if (!terminals_.is_subset_of(component_)) throw PreconditionError("terminal outside component");
  if (!is_connected(host, component_)) throw PreconditionError("spanner component is not connected");
  bound_ = static_cast<int>((terminals_.size() + 1) / 2);
}

std::size_t count_cross_edges(const Graph& g, const VertexSet& side_a, const VertexSet& side_b) {
  auto in_b = membership_mask(side_b, g.order());
  std::size_t count = 0;
  for (Vertex u : side_a)
    for (Vertex w : g.neighbors(u))
      if (in_b[w]) ++count;
  return count;
}

std::size_t max_component_size(const Graph& g, const VertexSet& s) {
  std::size_t best = 0;
  for (const auto& c : connected_components(g, s)) best = std::max(best, c.size());
  return best;
}

// ---------------------------------------------------------------------------
// Minimum connector: node-weighted Dreyfus-Wagner over the terminal subsets.
//
// Vertex of rank r in the component weighs 2^N - 2^(N-1-r). Any set of size s then
// costs s*2^N minus a bonus that is larger for lexicographically smaller sets, so the
// unique cheapest connected set is the lexicographically first one of minimum size.

VertexSet minimum_connector(const Graph& g, const VertexSet& component, const VertexSet& terminals) {
  using Cost = boost::multiprecision::cpp_int;

  if (terminals.empty()) throw PreconditionError("minimum_connector: no terminals");
  if (!terminals.is_subset_of(component)) throw PreconditionError("minimum_connector: terminal outside component");
  if (terminals.size() > kMaxConnectorTerminals) {
    throw BudgetExceeded("minimum_connector: " + std::to_string(terminals.size()) + " terminals exceed the limit of " +
                         std::to_string(kMaxConnectorTerminals));
  }
  if (!is_connected(g, component)) throw PreconditionError("minimum_connector: component is not connected");
  if (terminals.size() == 1) return terminals;

  const auto sub = induced_subgraph(g, component);
  const int n = sub.graph.order();
  std::vector<int> term;
  for (Vertex t : terminals) {
    auto it = std::lower_bound(sub.to_host.begin(), sub.to_host.end(), t);
    term.push_back(static_cast<int>(it - sub.to_host.begin()));
  }
  const int k = static_cast<int>(term.size());
  const unsigned full = (1u << k) - 1;

  std::vector<Cost> weight(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) weight[r] = (Cost(1) << n) - (Cost(1) << (n - 1 - r));

  struct Step {
    enum Kind : char { None, Base, Merge, Extend } kind = None;
    int arg = 0;  // submask for Merge, predecessor vertex for Extend
  };
  std::vector<std::vector<Cost>> dp(full + 1, std::vector<Cost>(static_cast<std::size_t>(n)));
  std::vector<std::vector<Step>> how(full + 1, std::vector<Step>(static_cast<std::size_t>(n)));

  for (int i = 0; i < k; ++i) {
    dp[1u << i][term[i]] = weight[term[i]];
    how[1u << i][term[i]] = {Step::Base, 0};
  }

  using Entry = std::pair<Cost, int>;
  for (unsigned mask = 1; mask <= full; ++mask) {
    auto& cost = dp[mask];
    auto& step = how[mask];
    const unsigned low = mask & (~mask + 1);
    if (mask != low) {
      for (int v = 0; v < n; ++v) {
        for (unsigned part = (mask - 1) & mask; part > 0; part = (part - 1) & mask) {
          if (!(part & low)) continue;  // each unordered split once
          const unsigned rest = mask ^ part;
          if (how[part][v].kind == Step::None || how[rest][v].kind == Step::None) continue;
          Cost c = dp[part][v] + dp[rest][v] - weight[v];
          if (step[v].kind == Step::None || c < cost[v]) {
            cost[v] = std::move(c);
            step[v] = {Step::Merge, static_cast<int>(part)};
          }
        }
      }
    }
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (int v = 0; v < n; ++v)
      if (step[v].kind != Step::None) queue.emplace(cost[v], v);
    while (!queue.empty()) {
      auto [c, v] = queue.top();
      queue.pop();
      if (c != cost[v]) continue;
      for (Vertex u : sub.graph.neighbors(v)) {
        Cost next = c + weight[u];
        if (step[u].kind == Step::None || next < cost[u]) {
          cost[u] = next;
          step[u] = {Step::Extend, v};
          queue.emplace(std::move(next), u);
        }
      }
    }
  }

  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<unsigned, int>> work{{full, term[0]}};
  while (!work.empty()) {
    auto [mask, v] = work.back();
    work.pop_back();
    chosen[v] = 1;
    const Step s = how[mask][v];
    if (s.kind == Step::Merge) {
      work.emplace_back(static_cast<unsigned>(s.arg), v);
      work.emplace_back(mask ^ static_cast<unsigned>(s.arg), v);
    } else if (s.kind == Step::Extend) {
      work.emplace_back(mask, s.arg);
    } else if (s.kind == Step::None) {
      throw InvariantError("minimum_connector: unreachable terminal in a connected component");
    }
  }
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if (chosen[v]) out.push_back(sub.to_host[v]);
  return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Bounded bipartition: depth-first assignment in BFS order, parity of depth tried first.

Bipartition bounded_bipartition(const Graph& g, const VertexSet& h, int bound) {
  if (h.empty()) throw PreconditionError("bounded_bipartition: empty vertex set");
  if (bound < 1) throw PreconditionError("bounded_bipartition: bound must be at least 1");
  const int n = g.order();
  auto inside = membership_mask(h, n);

  std::vector<Vertex> order;
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (Vertex root : h) {
    if (placed[root]) continue;
    std::deque<Vertex> queue{root};
    placed[root] = 1;
    depth[root] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (inside[w] && !placed[w]) {
          placed[w] = 1;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<signed char> side(static_cast<std::size_t>(n), -1);
  std::vector<int> mark(static_cast<std::size_t>(n), 0);
  int stamp = 0;
  std::vector<Vertex> stack;
  // Size of v's same-side component among assigned vertices, capped at bound + 1.
  auto too_big = [&](Vertex v) {
    ++stamp;
    stack.assign(1, v);
    mark[v] = stamp;
    int size = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      if (++size > bound) return true;
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == side[v] && mark[w] != stamp) {
          mark[w] = stamp;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  const std::size_t total = order.size();
  std::vector<int> tried(total, 0);  // choices already attempted at each position
  std::size_t pos = 0;
  while (pos < total) {
    Vertex v = order[pos];
    if (tried[pos] == 2) {
      side[v] = -1;
      tried[pos] = 0;
      if (pos == 0) throw InvariantError("bounded_bipartition: no split with component size <= " + std::to_string(bound));
      --pos;
      continue;
    }
    const int preferred = depth[v] & 1;
    side[v] = static_cast<signed char>(tried[pos] == 0 ? preferred : 1 - preferred);
    ++tried[pos];
    if (!too_big(v)) ++pos;
  }

  std::vector<Vertex> a, b;
  for (Vertex v : h) (side[v] == 0 ? a : b).push_back(v);
  return Bipartition{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

// ---------------------------------------------------------------------------
// Refinement moves.

namespace {

enum Side : signed char { Outside = -1, SideA = 0, SideB = 1 };

struct Labels {
  std::vector<signed char> side;

  VertexSet collect(Side which) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < side.size(); ++v)
      if (side[v] == which) out.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(out));
  }
};

// Vertices of H reachable from `root` along edges that cross between the sides.
std::vector<Vertex> cross_reach(const Graph& g, const Labels& labels, Vertex root) {
  std::vector<char> seen(labels.side.size(), 0);
  std::vector<Vertex> out{root}, stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (labels.side[w] == Outside || labels.side[w] == labels.side[u] || seen[w]) continue;
      seen[w] = 1;
      out.push_back(w);
      stack.push_back(w);
    }
  }
  return out;
}

}  // namespace

std::optional<std::string> check_triple(const Graph& g, const VertexSet& component, const Triple& triple,
                                        int bound) {
  if (triple.h.empty()) return "H is empty";
  if (!triple.h.is_subset_of(component)) return "H leaves the component";
  if (set_union(triple.side_a, triple.side_b) != triple.h || triple.side_a.size() + triple.side_b.size() != triple.h.size())
    return "sides do not partition H";
  if (!is_connected(g, triple.h)) return "H is not connected";
  if (count_cross_edges(g, triple.side_a, triple.side_b) != triple.cross_edges) return "stale cross-edge count";
  if (max_component_size(g, triple.side_a) > static_cast<std::size_t>(bound) ||
      max_component_size(g, triple.side_b) > static_cast<std::size_t>(bound))
    return "side component exceeds bound " + std::to_string(bound);

  Labels labels{std::vector<signed char>(static_cast<std::size_t>(g.order()), Outside)};
  for (Vertex v : triple.side_a) labels.side[v] = SideA;
  for (Vertex v : triple.side_b) labels.side[v] = SideB;
  if (cross_reach(g, labels, triple.h.min()).size() != triple.h.size()) return "cross subgraph is disconnected";

  for (Vertex v : component) {
    if (labels.side[v] != Outside) continue;
    bool touches = false, sees_a = false, sees_b = false;
    for (Vertex w : g.neighbors(v)) {
      touches |= labels.side[w] != Outside;
      sees_a |= labels.side[w] == SideA;
      sees_b |= labels.side[w] == SideB;
    }
    if (touches && !(sees_a && sees_b)) return "vertex " + std::to_string(v) + " sees only one side of H";
  }
  return std::nullopt;
}

Triple refine_triple(const SpannerRequest& req, Triple start, SpannerTrace* trace) {
  const Graph& g = req.host();
  const int bound = req.bound();
  if (!start.h.is_subset_of(req.component())) throw PreconditionError("refine_triple: H leaves the component");
  if (!req.terminals().is_subset_of(start.h)) throw PreconditionError("refine_triple: H misses a terminal");
  if (set_union(start.side_a, start.side_b) != start.h || start.side_a.size() + start.side_b.size() != start.h.size())
    throw PreconditionError("refine_triple: sides do not partition H");
  if (!is_connected(g, start.h)) throw PreconditionError("refine_triple: H is not connected");
  if (max_component_size(g, start.side_a) > static_cast<std::size_t>(bound) ||
      max_component_size(g, start.side_b) > static_cast<std::size_t>(bound))
    throw PreconditionError("refine_triple: start violates the side bound");

  Labels labels{std::vector<signed char>(static_cast<std::size_t>(g.order()), Outside)};
  for (Vertex v : start.side_a) labels.side[v] = SideA;
  for (Vertex v : start.side_b) labels.side[v] = SideB;
  std::vector<Vertex> members = start.h.members();
  std::size_t cross = count_cross_edges(g, start.side_a, start.side_b);

  SpannerTrace local;
  SpannerTrace& log = trace ? *trace : local;
  log = SpannerTrace{};
  log.move_limit = induced_edge_count(g, req.component());
  log.cross_history.push_back(cross);

  auto after_move = [&](const char* name) {
    std::size_t now = count_cross_edges(g, labels.collect(SideA), labels.collect(SideB));
    if (now <= cross) throw InvariantError(std::string("refine_triple: ") + name + " did not increase cross edges");
    cross = now;
    log.cross_history.push_back(cross);
    if (static_cast<std::size_t>(log.moves()) > log.move_limit)
      throw InvariantError("refine_triple: move count exceeds the component's edge count");
    if (max_component_size(g, labels.collect(SideA)) > static_cast<std::size_t>(bound) ||
        max_component_size(g, labels.collect(SideB)) > static_cast<std::size_t>(bound))
      throw InvariantError(std::string("refine_triple: ") + name + " broke the side bound");
  };

  while (true) {
    const Vertex root = *std::min_element(members.begin(), members.end());
    auto reach = cross_reach(g, labels, root);
    if (reach.size() != members.size()) {
      // Reconnect: swap sides on everything the cross subgraph does not reach from the root.
      std::vector<char> in_x(labels.side.size(), 0);
      for (Vertex v : reach) in_x[v] = 1;
      for (Vertex v : members)
        if (!in_x[v]) labels.side[v] = labels.side[v] == SideA ? SideB : SideA;
      ++log.reconnect_moves;
      after_move("reconnect");
      continue;
    }

    bool moved = false;
    for (Vertex v : req.component()) {
      if (labels.side[v] != Outside) continue;
      bool touches = false, sees_a = false, sees_b = false;
      for (Vertex w : g.neighbors(v)) {
        touches |= labels.side[w] != Outside;
        sees_a |= labels.side[w] == SideA;
        sees_b |= labels.side[w] == SideB;
      }
      if (!touches || (sees_a && sees_b)) continue;
      labels.side[v] = sees_a ? SideB : SideA;
      members.push_back(v);
      ++log.extend_moves;
      after_move("extend");
      moved = true;
      break;
    }
    if (!moved) break;
  }

  Triple out;
  out.side_a = labels.collect(SideA);
  out.side_b = labels.collect(SideB);
  out.h = set_union(out.side_a, out.side_b);
  out.cross_edges = cross;
  if (auto err = check_triple(g, req.component(), out, bound)) throw InvariantError("refine_triple: " + *err);
  return out;
}

Triple build_spanner(const SpannerRequest& req, SpannerTrace* trace) {
  const Graph& g = req.host();
  VertexSet h = minimum_connector(g, req.component(), req.terminals());
  auto split = bounded_bipartition(g, h, req.bound());
  Triple start;
  start.h = std::move(h);
  start.cross_edges = count_cross_edges(g, split.side_a, split.side_b);
  start.side_a = std::move(split.side_a);
  start.side_b = std::move(split.side_b);
  return refine_triple(req, std::move(start), trace);
}

}  // namespace oddcolor
