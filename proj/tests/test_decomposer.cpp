#include <doctest.h>

#include <set>

#include "oddcolor/decomposer.hpp"
#include "oddcolor/errors.hpp"
#include "oddcolor/generators.hpp"

using namespace oddcolor;

TEST_CASE("maximal bipartite part") {
  SUBCASE("bipartite graph is taken whole") {
    auto p = maximal_bipartite_part(grid_graph(3, 3));
    CHECK(p.index == 1);
    CHECK(p.vertices == VertexSet::range(9));
    CHECK(p.side_a == VertexSet{0, 2, 4, 6, 8});
    CHECK(p.side_b == VertexSet{1, 3, 5, 7});
  }
  SUBCASE("C5 stops one short") {
    auto p = maximal_bipartite_part(cycle_graph(5));
    CHECK(p.vertices == VertexSet{0, 1, 2, 3});
    CHECK(p.side_a == VertexSet{0, 2});
    CHECK(p.side_b == VertexSet{1, 3});
  }
  SUBCASE("K3") {
    auto p = maximal_bipartite_part(complete_graph(3));
    CHECK(p.vertices == VertexSet{0, 1});
  }
  SUBCASE("inclusion-maximal on random graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto g = connected_gnp(3 + static_cast<int>(seed % 30), 0.2, seed);
      auto p = maximal_bipartite_part(g);
      CHECK(is_connected(g, p.vertices));
      for (const auto& [u, v] : g.edges())
        if (p.vertices.contains(u) && p.vertices.contains(v)) CHECK(p.side_a.contains(u) != p.side_a.contains(v));
      for (Vertex v = 0; v < g.order(); ++v) {
        if (p.vertices.contains(v)) continue;
        bool a = false, b = false;
        for (Vertex w : g.neighbors(v)) {
          a |= p.side_a.contains(w);
          b |= p.side_b.contains(w);
        }
        CHECK(a == b);  // either untouched, or adding v would close an odd cycle
      }
    }
  }
}

TEST_CASE("pick component") {
  auto g = complete_graph(5);
  Decomposition d;
  d.t = 3;
  d.vertex_to_part = {1, 1, 0, 0, 0};
  d.parts.push_back(Part{1, {0, 1}, {0}, {1}});
  auto picked = pick_component(g, d);
  CHECK(picked.component == VertexSet{2, 3, 4});
  REQUIRE(picked.adjacent_parts.size() == 1);
  CHECK(picked.adjacent_parts[0].index == 1);

  SUBCASE("lowest component first") {
    auto path = path_graph(5);
    Decomposition mid;
    mid.t = 3;
    mid.vertex_to_part = {0, 0, 1, 0, 0};
    mid.parts.push_back(Part{1, {2}, {2}, {}});
    CHECK(pick_component(path, mid).component == VertexSet{0, 1});
  }
  SUBCASE("nothing left") {
    d.vertex_to_part = {1, 1, 1, 1, 1};
    CHECK_THROWS_AS(pick_component(g, d), PreconditionError);
  }
}

TEST_CASE("decompose: C6 is a single bipartite part") {
  auto out = decompose(cycle_graph(6), 3);
  auto* d = std::get_if<Decomposition>(&out);
  REQUIRE(d);
  REQUIRE(d->parts.size() == 1);
  CHECK(d->parts[0].side_a == VertexSet{0, 2, 4});
  CHECK(d->parts[0].side_b == VertexSet{1, 3, 5});
}

TEST_CASE("decompose: K5 gets stuck for t = 3") {
  DecomposeTrace trace;
  auto out = decompose(complete_graph(5), 3, &trace);
  auto* stuck = std::get_if<StuckState>(&out);
  REQUIRE(stuck);
  REQUIRE(stuck->partial.parts.size() == 2);
  CHECK(stuck->partial.parts[0].vertices == VertexSet{0, 1});
  CHECK(stuck->partial.parts[1].vertices == VertexSet{2, 3});
  CHECK(stuck->partial.parts[1].side_a == VertexSet{2});
  CHECK(stuck->partial.parts[1].side_b == VertexSet{3});
  CHECK(stuck->component == VertexSet{4});
  REQUIRE(stuck->adjacent_parts.size() == 2);
  CHECK(stuck->adjacent_parts[0].index == 1);
  CHECK(stuck->adjacent_parts[1].index == 2);
  REQUIRE(trace.spanner_calls.size() == 1);
  CHECK(trace.spanner_calls[0].extend_moves == 1);
  CHECK_FALSE(check_decomposition(complete_graph(5), stuck->partial, DecompositionState::Stuck));
}

TEST_CASE("decompose: K4 completes for t = 3") {
  auto out = decompose(complete_graph(4), 3);
  auto* d = std::get_if<Decomposition>(&out);
  REQUIRE(d);
  REQUIRE(d->parts.size() == 2);
  CHECK(d->parts[0].vertices == VertexSet{0, 1});
  CHECK(d->parts[1].vertices == VertexSet{2, 3});
  CHECK(d->vertex_to_part == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("decompose: errors") {
  CHECK_THROWS_AS(decompose(cycle_graph(5), 2), PreconditionError);
  CHECK_THROWS_AS(decompose(Graph::from_edges(2, {}), 3), PreconditionError);
  CHECK_THROWS_AS(decompose(Graph::from_edges(0, {}), 3), PreconditionError);
}

TEST_CASE("check_decomposition catches broken invariants") {
  auto g = complete_graph(4);
  auto d = std::get<Decomposition>(decompose(g, 3));
  REQUIRE_FALSE(check_decomposition(g, d, DecompositionState::Completed));

  auto swapped = d;
  std::swap(swapped.parts[1].side_a, swapped.parts[1].side_b);
  swapped.parts[1].side_a.insert(3);
  swapped.parts[1].side_b = {};
  CHECK(check_decomposition(g, swapped, DecompositionState::Completed));

  auto uncovered = d;
  uncovered.parts.pop_back();
  uncovered.vertex_to_part = {1, 1, 0, 0};
  CHECK(check_decomposition(g, uncovered, DecompositionState::Completed));
  CHECK_FALSE(check_decomposition(g, uncovered, DecompositionState::Stuck));
}

TEST_CASE("property: outcomes on random graphs") {
  const double ps[] = {0.05, 0.1, 0.3, 0.6};
  int completed = 0, stuck_count = 0;
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    const int n = 1 + static_cast<int>(seed * 7 % 45);
    const int t = 3 + static_cast<int>(seed % 4);
    auto g = connected_gnp(n, ps[seed % 4], seed);
    auto out = decompose(g, t);
    if (auto* d = std::get_if<Decomposition>(&out)) {
      ++completed;
      CHECK_FALSE(check_decomposition(g, *d, DecompositionState::Completed));
      CHECK(d->parts.size() <= static_cast<std::size_t>(n));
      // Back-degree in construction order is at most t-2.
      for (std::size_t i = 0; i < d->parts.size(); ++i) {
        std::set<int> earlier;
        for (Vertex v : d->parts[i].vertices)
          for (Vertex w : g.neighbors(v))
            if (d->vertex_to_part[w] < static_cast<int>(i) + 1) earlier.insert(d->vertex_to_part[w]);
        CHECK(earlier.size() <= static_cast<std::size_t>(t - 2));
      }
    } else {
      ++stuck_count;
      const auto& s = std::get<StuckState>(out);
      CHECK(s.adjacent_parts.size() >= static_cast<std::size_t>(t - 1));
      CHECK_FALSE(check_decomposition(g, s.partial, DecompositionState::Stuck));
    }
  }
  CHECK(completed > 0);
  CHECK(stuck_count > 0);
}
