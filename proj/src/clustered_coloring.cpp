#include "oddcolor/clustered_coloring.hpp"

#include <algorithm>
#include <set>

#include "oddcolor/errors.hpp"

namespace oddcolor {

AuxiliaryGraph build_auxiliary(const Graph& g, const Decomposition& d) {
  const int parts = static_cast<int>(d.parts.size());
  if (static_cast<int>(d.vertex_to_part.size()) != g.order() || !d.covers_everything())
    throw PreconditionError("build_auxiliary: decomposition does not cover the graph");

  std::vector<std::set<int>> neighbours(static_cast<std::size_t>(parts));
  for (const auto& [u, v] : g.edges()) {
    int a = d.vertex_to_part[u] - 1, b = d.vertex_to_part[v] - 1;
    if (a == b) continue;
    neighbours[a].insert(b);
    neighbours[b].insert(a);
  }
  AuxiliaryGraph aux;
  for (int p = 0; p < parts; ++p) {
    const auto& nb = neighbours[p];
    aux.adjacency.emplace_back(nb.begin(), nb.end());
    auto earlier = std::distance(nb.begin(), nb.lower_bound(p));
    if (earlier > d.t - 2) {
      throw InvariantError("build_auxiliary: part " + std::to_string(p + 1) + " has " + std::to_string(earlier) +
                           " earlier neighbours, more than t-2 = " + std::to_string(d.t - 2));
    }
  }
  return aux;
}

std::vector<int> color_parts(const AuxiliaryGraph& aux, int t) {
  std::vector<int> hue(static_cast<std::size_t>(aux.order()), 0);
  for (int p = 0; p < aux.order(); ++p) {
    std::vector<char> taken(static_cast<std::size_t>(t), 0);
    for (int q : aux.adjacency[p])
      if (q < p) taken[hue[q]] = 1;
    int h = 1;
    while (h <= t - 1 && taken[h]) ++h;
    if (h > t - 1) throw InvariantError("color_parts: palette of " + std::to_string(t - 1) + " hues exhausted");
    hue[p] = h;
  }
  return hue;
}

ClusteredColoring product_coloring(const Graph& g, const Decomposition& d, std::span<const int> part_hues) {
  if (part_hues.size() != d.parts.size()) throw PreconditionError("product_coloring: one hue per part required");
  ClusteredColoring out;
  out.t = d.t;
  out.colors.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    int index = d.vertex_to_part.at(v);
    if (index == 0) throw PreconditionError("product_coloring: vertex " + std::to_string(v) + " is not covered");
    const Part& p = d.part(index);
    out.colors[v] = VertexColor{part_hues[index - 1], p.side_a.contains(v) ? 1 : 2};
  }
  return out;
}

ColoringVerdict verify_coloring(const Graph& g, const ClusteredColoring& coloring, int t) {
  ColoringVerdict verdict;
  if (coloring.colors.size() != static_cast<std::size_t>(g.order())) {
    verdict.reason = "coloring has " + std::to_string(coloring.colors.size()) + " entries for " +
                     std::to_string(g.order()) + " vertices";
    return verdict;
  }
  const int cluster_limit = (t - 1) / 2;
  auto& report = verdict.report;
  report.colors_used = static_cast<int>(std::set<VertexColor>(coloring.colors.begin(), coloring.colors.end()).size());
  if (t >= 4) report.defect_bound = (t - 3) / 2;

  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    const VertexColor colour = coloring.colors[root];
    std::vector<Vertex> members{root}, stack{root};
    seen[root] = 1;
    int defect = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      int same = 0;
      for (Vertex w : g.neighbors(u)) {
        if (coloring.colors[w] != colour) continue;
        ++same;
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
          stack.push_back(w);
        }
      }
      defect = std::max(defect, same);
    }
    report.max_defect = std::max(report.max_defect, defect);
    if (static_cast<int>(members.size()) > report.max_component) {
      report.max_component = static_cast<int>(members.size());
      if (report.max_component > cluster_limit && verdict.offending_component.empty()) {
        verdict.offending_component = VertexSet(members);
      }
    }
  }

  if (report.colors_used > 2 * t - 2) {
    verdict.reason = std::to_string(report.colors_used) + " colors exceed 2t-2 = " + std::to_string(2 * t - 2);
  } else if (report.max_component > cluster_limit) {
    verdict.reason = "monochromatic component of size " + std::to_string(verdict.offending_component.size()) +
                     " exceeds " + std::to_string(cluster_limit);
  } else {
    verdict.accepted = true;
  }
  return verdict;
}

}  // namespace oddcolor
