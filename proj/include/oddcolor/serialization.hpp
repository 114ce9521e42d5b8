#pragma once

#include <json.hpp>

#include "oddcolor/certificates.hpp"
#include "oddcolor/clustered_coloring.hpp"
#include "oddcolor/decomposer.hpp"
#include "oddcolor/graph.hpp"
#include "oddcolor/parity_spanner.hpp"

namespace oddcolor {

// Key order is kept as written so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// {"n": int, "edges": [[u, v], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"H": [...], "A": [...], "B": [...]}
Json to_json(const Triple& triple);

// {"t": int, "parts": [{"index": i, "H": [...], "A": [...], "B": [...]}]}
Json to_json(const Decomposition& d);

// {"t": int, "trees": [{"vertices": [...], "edges": [[u, v], ...]}],
//  "coloring": {"v": 1|2}, "joins": [{"pair": [i, j], "edge": [u, v]}]}
Json to_json(const OddExpansionCertificate& cert);
OddExpansionCertificate certificate_from_json(const Json& j);

// {"t": int, "colors": [[hue, side] per vertex]}
Json to_json(const ClusteredColoring& coloring);
ClusteredColoring coloring_from_json(const Json& j);

// {"colors_used": int, "max_component": int, "max_defect": int}
Json to_json(const ColoringReport& report);

}  // namespace oddcolor
