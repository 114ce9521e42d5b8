#include <doctest.h>

#include "oddcolor/certificates.hpp"
#include "oddcolor/errors.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/serialization.hpp"

using namespace oddcolor;

namespace {

OddExpansionCertificate k5_certificate() {
  auto g = complete_graph(5);
  return extract_certificate(g, 3, std::get<StuckState>(decompose(g, 3)));
}

// Every vertex its own tree, all colored 1, every edge a join.
OddExpansionCertificate singleton_certificate(int t) {
  OddExpansionCertificate c;
  c.t = t;
  for (Vertex v = 0; v < t; ++v) {
    c.trees.push_back(TreeSubgraph{VertexSet{v}, {}});
    c.coloring[v] = 1;
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) c.joins.push_back(Join{i, j, {i, j}});
  return c;
}

}  // namespace

TEST_CASE("K5 certificate for t = 3") {
  auto g = complete_graph(5);
  auto cert = k5_certificate();
  REQUIRE(cert.trees.size() == 3);
  CHECK(cert.trees[0].vertices == VertexSet{0, 1});
  CHECK(cert.trees[0].edges == std::vector<Edge>{{0, 1}});
  CHECK(cert.trees[1].vertices == VertexSet{2, 3});
  CHECK(cert.trees[2].vertices == VertexSet{4});
  CHECK(cert.coloring == std::map<Vertex, int>{{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 1}});
  REQUIRE(cert.joins.size() == 3);
  CHECK(cert.joins[0].edge == Edge{0, 2});
  CHECK(cert.joins[1].edge == Edge{0, 4});
  CHECK(cert.joins[2].edge == Edge{2, 4});
  auto verdict = verify_certificate(g, cert);
  CHECK(verdict.accepted);
  CHECK(verdict.reason.empty());
}

TEST_CASE("verifier rejects tampered certificates") {
  auto g = complete_graph(5);
  SUBCASE("recolored join endpoint") {
    auto cert = k5_certificate();
    cert.coloring[4] = 2;
    auto v = verify_certificate(g, cert);
    CHECK_FALSE(v.accepted);
    CHECK(v.reason == "join edge not monochromatic");
  }
  SUBCASE("overlapping trees") {
    auto cert = k5_certificate();
    cert.trees[2] = TreeSubgraph{VertexSet{0}, {}};
    CHECK(verify_certificate(g, cert).reason == "trees not disjoint");
  }
  SUBCASE("improper tree coloring") {
    auto cert = k5_certificate();
    cert.coloring[1] = 1;
    CHECK_FALSE(verify_certificate(g, cert).accepted);
  }
  SUBCASE("missing join") {
    auto cert = k5_certificate();
    cert.joins.pop_back();
    CHECK(verify_certificate(g, cert).reason == "some pair of trees has no join");
  }
  SUBCASE("non-edge") {
    auto c5 = cycle_graph(5);
    CHECK_FALSE(verify_certificate(c5, k5_certificate()).accepted);
  }
  SUBCASE("vertex outside the graph") {
    CHECK_FALSE(verify_certificate(complete_graph(3), k5_certificate()).accepted);
  }
  SUBCASE("coloring of a vertex outside the trees") {
    auto cert = singleton_certificate(3);
    cert.coloring[4] = 1;
    CHECK_FALSE(verify_certificate(g, cert).accepted);
  }
  SUBCASE("wrong tree count") {
    auto cert = k5_certificate();
    cert.t = 4;
    CHECK_FALSE(verify_certificate(g, cert).accepted);
  }
}

TEST_CASE("singleton trees in K_t") {
  for (int t = 1; t <= 7; ++t) {
    auto g = complete_graph(t);
    CHECK(verify_certificate(g, singleton_certificate(t)).accepted);
  }
  // Same shape on C4 fails: 0 and 2 are not adjacent.
  CHECK_FALSE(verify_certificate(cycle_graph(4), singleton_certificate(3)).accepted);
}

TEST_CASE("extraction needs t-1 adjacent parts") {
  auto g = complete_graph(5);
  auto stuck = std::get<StuckState>(decompose(g, 3));
  stuck.adjacent_parts.pop_back();
  CHECK_THROWS_AS(extract_certificate(g, 3, stuck), PreconditionError);
}

TEST_CASE("relabel maps through the host table") {
  auto cert = singleton_certificate(3);
  const std::vector<Vertex> host{5, 7, 9};
  auto moved = relabel(cert, host);
  CHECK(moved.trees[1].vertices == VertexSet{7});
  CHECK(moved.joins[2].edge == Edge{7, 9});
  CHECK(moved.coloring.count(9) == 1);
  auto g = Graph::from_edges(10, {{5, 7}, {5, 9}, {7, 9}});
  CHECK(verify_certificate(g, moved).accepted);
}

TEST_CASE("property: extracted certificates verify and survive JSON") {
  const double ps[] = {0.1, 0.3, 0.6};
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 40);
    const int t = 3 + static_cast<int>(seed % 4);
    auto g = connected_gnp(n, ps[seed % 3], seed);
    auto out = decompose(g, t);
    auto* stuck = std::get_if<StuckState>(&out);
    if (!stuck) continue;
    ++seen;
    auto cert = extract_certificate(g, t, *stuck);
    auto v = verify_certificate(g, cert);
    CHECK_MESSAGE(v.accepted, v.reason);
    auto back = certificate_from_json(Json::parse(to_json(cert).dump()));
    CHECK(to_json(back) == to_json(cert));
    CHECK(verify_certificate(g, back).accepted);

    // Flipping the color of the whole last tree breaks exactly the joins into it.
    auto flipped = cert;
    for (Vertex v2 : flipped.trees.back().vertices) flipped.coloring[v2] = 3 - flipped.coloring[v2];
    CHECK_FALSE(verify_certificate(g, flipped).accepted);
  }
  CHECK(seen > 20);
}

TEST_CASE("property: bipartite graphs never produce a t = 3 certificate") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = connected_bipartite(2 + static_cast<int>(seed % 50), 0.2, seed);
    CHECK(std::holds_alternative<Decomposition>(decompose(g, 3)));
  }
}
