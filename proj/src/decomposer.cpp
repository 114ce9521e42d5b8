#include "oddcolor/decomposer.hpp"

#include <algorithm>
#include <set>

#include "oddcolor/errors.hpp"

namespace oddcolor {

bool Decomposition::covers_everything() const {
  return std::all_of(vertex_to_part.begin(), vertex_to_part.end(), [](int p) { return p != 0; });
}

namespace {

void append_part(Decomposition& d, Part part) {
  part.index = static_cast<int>(d.parts.size()) + 1;
  for (Vertex v : part.vertices) {
    if (d.vertex_to_part[v] != 0) throw InvariantError("decompose: part overlaps an earlier part");
    d.vertex_to_part[v] = part.index;
  }
  d.parts.push_back(std::move(part));
}

// Sorted list of adjacent part pairs (i < j).
std::vector<std::pair<int, int>> part_adjacency(const Graph& g, const std::vector<int>& owner) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& [u, v] : g.edges()) {
    int a = owner[u], b = owner[v];
    if (a != 0 && b != 0 && a != b) pairs.emplace(std::min(a, b), std::max(a, b));
  }
  return {pairs.begin(), pairs.end()};
}

bool parts_adjacent(const std::vector<std::pair<int, int>>& adjacency, int a, int b) {
  return std::binary_search(adjacency.begin(), adjacency.end(), std::pair{std::min(a, b), std::max(a, b)});
}

std::vector<int> parts_touching(const Graph& g, const VertexSet& c, const std::vector<int>& owner, int up_to) {
  std::set<int> touching;
  for (Vertex v : c)
    for (Vertex w : g.neighbors(v))
      if (owner[w] != 0 && owner[w] <= up_to) touching.insert(owner[w]);
  return {touching.begin(), touching.end()};
}

}  // namespace

Part maximal_bipartite_part(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("maximal_bipartite_part: empty graph");
  enum : signed char { Out = -1, A = 0, B = 1 };
  std::vector<signed char> side(static_cast<std::size_t>(g.order()), Out);
  side[0] = A;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (side[v] != Out) continue;
      bool sees_a = false, sees_b = false;
      for (Vertex w : g.neighbors(v)) {
        sees_a |= side[w] == A;
        sees_b |= side[w] == B;
      }
      if (sees_a == sees_b) continue;  // not adjacent, or would close an odd cycle
      side[v] = sees_a ? B : A;
      grew = true;
    }
  }
  Part part;
  part.index = 1;
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (side[v] == A) a.push_back(v);
    if (side[v] == B) b.push_back(v);
  }
  part.side_a = VertexSet(std::move(a));
  part.side_b = VertexSet(std::move(b));
  part.vertices = set_union(part.side_a, part.side_b);
  return part;
}

PickedComponent pick_component(const Graph& g, const Decomposition& so_far) {
  std::vector<Vertex> uncovered;
  for (Vertex v = 0; v < g.order(); ++v)
    if (so_far.vertex_to_part[v] == 0) uncovered.push_back(v);
  if (uncovered.empty()) throw PreconditionError("pick_component: every vertex is covered");
  PickedComponent out;
  out.component = connected_components(g, VertexSet(std::move(uncovered))).front();
  for (int index : parts_touching(g, out.component, so_far.vertex_to_part, static_cast<int>(so_far.parts.size())))
    out.adjacent_parts.push_back(so_far.part(index));
  return out;
}

DecomposeOutcome decompose(const Graph& g, int t, DecomposeTrace* trace) {
  if (t < 3) throw PreconditionError("decompose: t must be at least 3");
  if (!is_connected(g, VertexSet::range(g.order()))) throw PreconditionError("decompose: graph is not connected");

  Decomposition d;
  d.t = t;
  d.vertex_to_part.assign(static_cast<std::size_t>(g.order()), 0);
  append_part(d, maximal_bipartite_part(g));

  while (!d.covers_everything()) {
    auto picked = pick_component(g, d);
    const auto& adjacent = picked.adjacent_parts;
    if (adjacent.empty()) throw InvariantError("decompose: leftover component touches no part in a connected graph");
    for (std::size_t i = 0; i < adjacent.size(); ++i) {
      for (std::size_t j = i + 1; j < adjacent.size(); ++j) {
        bool touching = false;
        for (Vertex v : adjacent[i].vertices)
          for (Vertex w : g.neighbors(v))
            touching |= d.vertex_to_part[w] == adjacent[j].index;
        if (!touching) {
          throw InvariantError("decompose: parts " + std::to_string(adjacent[i].index) + " and " +
                               std::to_string(adjacent[j].index) + " share a component but are not adjacent");
        }
      }
    }

    if (adjacent.size() >= static_cast<std::size_t>(t - 1)) {
      if (auto err = check_decomposition(g, d, DecompositionState::Stuck)) throw InvariantError("decompose: " + *err);
      return StuckState{std::move(picked.component), std::move(picked.adjacent_parts), std::move(d)};
    }

    // One witness per adjacent part: its smallest neighbour inside the component.
    std::vector<Vertex> witnesses;
    for (const Part& q : adjacent) {
      for (Vertex v : picked.component) {
        bool hit = false;
        for (Vertex w : g.neighbors(v)) hit |= d.vertex_to_part[w] == q.index;
        if (hit) {
          witnesses.push_back(v);
          break;
        }
      }
    }

    SpannerRequest request(g, picked.component, VertexSet(std::move(witnesses)));
    SpannerTrace spanner_log;
    Triple triple = build_spanner(request, &spanner_log);
    if (trace) trace->spanner_calls.push_back(std::move(spanner_log));

    Part part;
    part.vertices = std::move(triple.h);
    part.side_a = std::move(triple.side_a);
    part.side_b = std::move(triple.side_b);
    append_part(d, std::move(part));
  }

  if (auto err = check_decomposition(g, d, DecompositionState::Completed)) throw InvariantError("decompose: " + *err);
  return d;
}

std::optional<std::string> check_decomposition(const Graph& g, const Decomposition& d, DecompositionState state) {
  const bool require_cover = state == DecompositionState::Completed;
  const int n = g.order();
  if (d.t < 3) return "t below 3";
  if (static_cast<int>(d.vertex_to_part.size()) != n) return "vertex map has the wrong size";

  std::vector<int> owner(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Part& p = d.parts[i];
    const std::string name = "part " + std::to_string(i + 1);
    if (p.index != static_cast<int>(i) + 1) return name + " has index " + std::to_string(p.index);
    if (p.vertices.empty()) return name + " is empty";
    for (Vertex v : p.vertices) {
      if (!g.valid(v)) return name + " holds an invalid vertex";
      if (owner[v] != 0) return name + " overlaps part " + std::to_string(owner[v]);
      owner[v] = p.index;
    }
  }
  if (owner != d.vertex_to_part) return "vertex map disagrees with the parts";
  if (require_cover && std::find(owner.begin(), owner.end(), 0) != owner.end()) return "parts do not cover the graph";

  const int bound = side_bound(d.t);
  for (const Part& p : d.parts) {
    const std::string name = "part " + std::to_string(p.index);
    Triple as_triple{p.vertices, p.side_a, p.side_b, count_cross_edges(g, p.side_a, p.side_b)};
    // Properties (1) and (2); (3) is checked globally below, so test against H itself.
    if (auto err = check_triple(g, p.vertices, as_triple, bound)) return name + ": " + *err;
  }

  // (3): anything outside parts 1..i that touches H_i sees both A_i and B_i.
  for (const Part& p : d.parts) {
    for (Vertex v = 0; v < n; ++v) {
      if (owner[v] != 0 && owner[v] <= p.index) continue;
      bool touches = false, sees_a = false, sees_b = false;
      for (Vertex w : g.neighbors(v)) {
        if (owner[w] != p.index) continue;
        touches = true;
        sees_a |= p.side_a.contains(w);
        sees_b |= p.side_b.contains(w);
      }
      if (touches && !(sees_a && sees_b))
        return "vertex " + std::to_string(v) + " sees only one side of part " + std::to_string(p.index);
    }
  }

  // (4): every leftover component after parts 1..i touches at most t-2 of them, pairwise adjacent.
  const auto adjacency = part_adjacency(g, owner);
  for (int i = 1; i <= static_cast<int>(d.parts.size()); ++i) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (owner[v] == 0 || owner[v] > i) rest.push_back(v);
    if (rest.empty()) continue;
    for (const auto& c : connected_components(g, VertexSet(std::move(rest)))) {
      auto touching = parts_touching(g, c, owner, i);
      if (require_cover && touching.size() > static_cast<std::size_t>(d.t - 2))
        return "after part " + std::to_string(i) + ", a component touches " + std::to_string(touching.size()) + " parts";
      for (std::size_t a = 0; a < touching.size(); ++a)
        for (std::size_t b = a + 1; b < touching.size(); ++b)
          if (!parts_adjacent(adjacency, touching[a], touching[b]))
            return "after part " + std::to_string(i) + ", parts " + std::to_string(touching[a]) + " and " +
                   std::to_string(touching[b]) + " share a component but are not adjacent";
    }
  }
  return std::nullopt;
}

}  // namespace oddcolor
