#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/parity_spanner.hpp"

namespace oddcolor {

// One piece H_i of the decomposition with its split (A_i, B_i).
struct Part {
  int index = 0;  // 1-based construction order
  VertexSet vertices;
  VertexSet side_a;
  VertexSet side_b;
};

struct Decomposition {
  int t = 0;
  std::vector<Part> parts;
  std::vector<int> vertex_to_part;  // part index per vertex, 0 while uncovered

  const Part& part(int index) const { return parts.at(static_cast<std::size_t>(index - 1)); }
  bool covers_everything() const;
};

// A leftover component adjacent to at least t-1 pairwise adjacent parts.
struct StuckState {
  VertexSet component;
  std::vector<Part> adjacent_parts;  // ascending by index
  Decomposition partial;
};

using DecomposeOutcome = std::variant<Decomposition, StuckState>;

struct PickedComponent {
  VertexSet component;
  std::vector<Part> adjacent_parts;
};

struct DecomposeTrace {
  std::vector<SpannerTrace> spanner_calls;
};

// Largest admissible side-component size for parameter t: ceil((t-2)/2).
inline int side_bound(int t) { return (t - 1) / 2; }

// Inclusion-maximal connected bipartite vertex set grown from vertex 0.
Part maximal_bipartite_part(const Graph& g);

// Uncovered component holding the smallest uncovered vertex, plus the parts touching it.
PickedComponent pick_component(const Graph& g, const Decomposition& so_far);

DecomposeOutcome decompose(const Graph& g, int t, DecomposeTrace* trace = nullptr);

enum class DecompositionState {
  Completed,  // parts cover V(g); all four invariants hold after every part
  Stuck,      // (1)-(3) hold and leftover components touch pairwise adjacent parts,
              // but some leftover may touch t-1 or more of them
};

// Rechecks the four decomposition invariants for every prefix of parts.
// Returns a description of the first failure.
std::optional<std::string> check_decomposition(const Graph& g, const Decomposition& d, DecompositionState state);

}  // namespace oddcolor
