#pragma once

#include <variant>
#include <vector>

#include "oddcolor/certificates.hpp"
#include "oddcolor/clustered_coloring.hpp"
#include "oddcolor/decomposer.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

struct ColoringOutcome {
  ClusteredColoring coloring;
  ColoringReport report;
};

// Either a verified clustered colouring of the whole graph, or a verified odd K_t certificate.
using CertifiedResult = std::variant<ColoringOutcome, OddExpansionCertificate>;

struct PipelineOptions {
  bool parallel = false;  // decompose connected components concurrently
};

// Everything the pipeline built on the way, in component order.
struct PipelineTrace {
  std::vector<Graph> component_graphs;          // relabeled component per completed decomposition
  std::vector<Decomposition> completed;          // parallel to component_graphs
  std::vector<SpannerTrace> spanner_calls;
};

// Decomposes every connected component. The first stuck component (by minimum vertex)
// yields a certificate; otherwise the per-component product colourings are combined.
// Both outcomes are verified against g before returning; a rejection throws VerificationError.
CertifiedResult certify_color(const Graph& g, int t, const PipelineOptions& options = {},
                              PipelineTrace* trace = nullptr);

}  // namespace oddcolor
