#include "oddcolor/serialization.hpp"

#include <string>

#include "oddcolor/errors.hpp"

namespace oddcolor {

namespace {

Json ids(const VertexSet& s) { return Json(s.members()); }

Json pair_of(Vertex u, Vertex v) { return Json::array({u, v}); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::pair<int, int> as_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw FormatError(std::string(what) + " must be a pair");
  return {as_int(j[0], what), as_int(j[1], what)};
}

VertexSet as_set(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return VertexSet(std::move(out));
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(pair_of(u, v));
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const Json& list = field(j, "edges");
  if (!list.is_array()) throw FormatError("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : list) edges.push_back(as_pair(e, "edge"));
  return Graph::from_edges(n, edges);
}

Json to_json(const Triple& triple) {
  return Json{{"H", ids(triple.h)}, {"A", ids(triple.side_a)}, {"B", ids(triple.side_b)}};
}

Json to_json(const Decomposition& d) {
  Json parts = Json::array();
  for (const Part& p : d.parts) {
    parts.push_back(Json{{"index", p.index}, {"H", ids(p.vertices)}, {"A", ids(p.side_a)}, {"B", ids(p.side_b)}});
  }
  return Json{{"t", d.t}, {"parts", std::move(parts)}};
}

Json to_json(const OddExpansionCertificate& cert) {
  Json trees = Json::array();
  for (const auto& tree : cert.trees) {
    Json edges = Json::array();
    for (const auto& [u, v] : tree.edges) edges.push_back(pair_of(u, v));
    trees.push_back(Json{{"vertices", ids(tree.vertices)}, {"edges", std::move(edges)}});
  }
  Json coloring = Json::object();
  for (const auto& [v, c] : cert.coloring) coloring[std::to_string(v)] = c;
  Json joins = Json::array();
  for (const Join& join : cert.joins) {
    joins.push_back(Json{{"pair", pair_of(join.tree_a, join.tree_b)}, {"edge", pair_of(join.edge.first, join.edge.second)}});
  }
  return Json{{"t", cert.t}, {"trees", std::move(trees)}, {"coloring", std::move(coloring)}, {"joins", std::move(joins)}};
}

OddExpansionCertificate certificate_from_json(const Json& j) {
  OddExpansionCertificate cert;
  cert.t = as_int(field(j, "t"), "t");
  const Json& trees = field(j, "trees");
  if (!trees.is_array()) throw FormatError("trees must be an array");
  for (const auto& tree : trees) {
    TreeSubgraph parsed;
    parsed.vertices = as_set(field(tree, "vertices"), "tree vertices");
    const Json& edges = field(tree, "edges");
    if (!edges.is_array()) throw FormatError("tree edges must be an array");
    for (const auto& e : edges) parsed.edges.push_back(as_pair(e, "tree edge"));
    cert.trees.push_back(std::move(parsed));
  }
  const Json& coloring = field(j, "coloring");
  if (!coloring.is_object()) throw FormatError("coloring must be an object");
  for (const auto& [key, value] : coloring.items()) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw FormatError("coloring key '" + key + "' is not a vertex id");
    cert.coloring[v] = as_int(value, "color");
  }
  const Json& joins = field(j, "joins");
  if (!joins.is_array()) throw FormatError("joins must be an array");
  for (const auto& join : joins) {
    auto [a, b] = as_pair(field(join, "pair"), "join pair");
    cert.joins.push_back(Join{a, b, as_pair(field(join, "edge"), "join edge")});
  }
  return cert;
}

Json to_json(const ClusteredColoring& coloring) {
  Json colors = Json::array();
  for (const auto& c : coloring.colors) colors.push_back(pair_of(c.hue, c.side));
  return Json{{"t", coloring.t}, {"colors", std::move(colors)}};
}

ClusteredColoring coloring_from_json(const Json& j) {
  ClusteredColoring coloring;
  coloring.t = as_int(field(j, "t"), "t");
  const Json& colors = field(j, "colors");
  if (!colors.is_array()) throw FormatError("colors must be an array");
  for (const auto& c : colors) {
    auto [hue, side] = as_pair(c, "color");
    coloring.colors.push_back(VertexColor{hue, side});
  }
  return coloring;
}

Json to_json(const ColoringReport& report) {
  return Json{{"colors_used", report.colors_used},
              {"max_component", report.max_component},
              {"max_defect", report.max_defect}};
}

}  // namespace oddcolor
