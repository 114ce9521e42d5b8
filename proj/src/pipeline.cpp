#include "oddcolor/pipeline.hpp"

#include <future>

#include "oddcolor/errors.hpp"

namespace oddcolor {

namespace {

struct ComponentRun {
  InducedSubgraph sub;
  DecomposeOutcome outcome;
  DecomposeTrace trace;
};

ComponentRun run_component(const Graph& g, const VertexSet& component, int t) {
  ComponentRun run{induced_subgraph(g, component), Decomposition{}, {}};
  run.outcome = decompose(run.sub.graph, t, &run.trace);
  return run;
}

}  // namespace

CertifiedResult certify_color(const Graph& g, int t, const PipelineOptions& options, PipelineTrace* trace) {
  if (t < 3) throw PreconditionError("certify_color: t must be at least 3");
  const auto components = connected_components(g);

  std::vector<ComponentRun> runs;
  runs.reserve(components.size());
  if (options.parallel && components.size() > 1) {
    std::vector<std::future<ComponentRun>> pending;
    for (const auto& c : components)
      pending.push_back(std::async(std::launch::async, run_component, std::cref(g), std::cref(c), t));
    for (auto& f : pending) runs.push_back(f.get());
  } else {
    for (const auto& c : components) runs.push_back(run_component(g, c, t));
  }

  for (auto& run : runs) {
    if (trace) {
      for (auto& call : run.trace.spanner_calls) trace->spanner_calls.push_back(call);
    }
    if (const auto* stuck = std::get_if<StuckState>(&run.outcome)) {
      auto cert = relabel(extract_certificate(run.sub.graph, t, *stuck), run.sub.to_host);
      if (auto verdict = verify_certificate(g, cert); !verdict) {
        throw VerificationError("certificate rejected: " + verdict.reason);
      }
      return cert;
    }
  }

  ColoringOutcome out;
  out.coloring.t = t;
  out.coloring.colors.resize(static_cast<std::size_t>(g.order()));
  for (auto& run : runs) {
    const auto& d = std::get<Decomposition>(run.outcome);
    const auto hues = color_parts(build_auxiliary(run.sub.graph, d), t);
    const auto local = product_coloring(run.sub.graph, d, hues);
    for (std::size_t v = 0; v < local.colors.size(); ++v) out.coloring.colors[run.sub.to_host[v]] = local.colors[v];
    if (trace) {
      trace->component_graphs.push_back(run.sub.graph);
      trace->completed.push_back(d);
    }
  }
  auto verdict = verify_coloring(g, out.coloring, t);
  if (!verdict) throw VerificationError("coloring rejected: " + verdict.reason);
  out.report = verdict.report;
  return out;
}

}  // namespace oddcolor
