#include "oddcolor/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "oddcolor/errors.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/graph_io.hpp"

namespace oddcolor::cli {

namespace {

std::string document(const Json& j) { return j.dump() + "\n"; }

bool certificate_fits(const Graph& g, const OddExpansionCertificate& cert) {
  auto ok = [&g](Vertex v) { return g.valid(v); };
  for (const auto& tree : cert.trees) {
    for (Vertex v : tree.vertices)
      if (!ok(v)) return false;
    for (const auto& [u, v] : tree.edges)
      if (!ok(u) || !ok(v)) return false;
  }
  for (const auto& [v, c] : cert.coloring)
    if (!ok(v)) return false;
  for (const auto& j : cert.joins)
    if (!ok(j.edge.first) || !ok(j.edge.second)) return false;
  return true;
}

const char* const kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
                                "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324"};

}  // namespace

CommandResult color_command(const Graph& g, int t, bool parallel, PipelineTrace* trace) {
  CommandResult result;
  try {
    auto outcome = certify_color(g, t, PipelineOptions{parallel}, trace);
    if (auto* colored = std::get_if<ColoringOutcome>(&outcome)) {
      Json j = to_json(colored->coloring);
      j["report"] = to_json(colored->report);
      result.exit_code = kExitColored;
      result.output = document(j);
    } else {
      result.exit_code = kExitCertificate;
      result.output = document(to_json(std::get<OddExpansionCertificate>(outcome)));
      result.message = "graph contains an odd K_" + std::to_string(t) + " minor";
    }
  } catch (const PreconditionError& e) {
    result.exit_code = kExitUsage;
    result.message = e.what();
  } catch (const BudgetExceeded& e) {
    result.exit_code = kExitUsage;
    result.message = e.what();
  } catch (const VerificationError& e) {
    result.exit_code = kExitRejected;
    result.message = e.what();
  } catch (const InvariantError& e) {
    result.exit_code = kExitRejected;
    result.message = std::string("internal invariant failed: ") + e.what();
  }
  return result;
}

CommandResult verify_command(const Graph& g, const Json& artifact) {
  CommandResult result;
  try {
    if (artifact.is_object() && artifact.contains("colors")) {
      auto coloring = coloring_from_json(artifact);
      if (coloring.colors.size() != static_cast<std::size_t>(g.order())) {
        result.message = "coloring has " + std::to_string(coloring.colors.size()) + " entries but the graph has " +
                         std::to_string(g.order()) + " vertices";
        return result;
      }
      auto verdict = verify_coloring(g, coloring, coloring.t);
      Json report = to_json(verdict.report);
      result.output = document(report);
      result.exit_code = verdict ? kExitColored : kExitRejected;
      result.message = verdict ? "coloring accepted" : "coloring rejected: " + verdict.reason;
    } else if (artifact.is_object() && artifact.contains("trees")) {
      auto cert = certificate_from_json(artifact);
      if (!certificate_fits(g, cert)) {
        result.message = "certificate names vertices outside the graph";
        return result;
      }
      auto verdict = verify_certificate(g, cert);
      result.exit_code = verdict ? kExitColored : kExitRejected;
      result.message = verdict ? "certificate accepted" : "certificate rejected: " + verdict.reason;
    } else {
      result.message = "artifact is neither a coloring nor a certificate";
    }
  } catch (const FormatError& e) {
    result.exit_code = kExitUsage;
    result.message = e.what();
  }
  return result;
}

CommandResult decompose_command(const Graph& g, int t) {
  CommandResult result;
  try {
    if (t < 3) throw PreconditionError("t must be at least 3");
    Json components = Json::array();
    bool stuck_any = false;
    for (const auto& c : connected_components(g)) {
      auto sub = induced_subgraph(g, c);
      auto outcome = decompose(sub.graph, t);
      auto lift = [&sub](const VertexSet& s) {
        std::vector<Vertex> out;
        for (Vertex v : s) out.push_back(sub.to_host[v]);
        return VertexSet(std::move(out));
      };
      auto lift_decomposition = [&](const Decomposition& d) {
        Decomposition host = d;
        for (Part& p : host.parts) {
          p.vertices = lift(p.vertices);
          p.side_a = lift(p.side_a);
          p.side_b = lift(p.side_b);
        }
        return to_json(host);
      };
      Json entry;
      if (const auto* done = std::get_if<Decomposition>(&outcome)) {
        entry = lift_decomposition(*done);
      } else {
        const auto& stuck = std::get<StuckState>(outcome);
        entry = lift_decomposition(stuck.partial);
        Json adjacent = Json::array();
        for (const Part& p : stuck.adjacent_parts) adjacent.push_back(p.index);
        entry["stuck"] = Json{{"component", Json(lift(stuck.component).members())}, {"adjacent_parts", adjacent}};
        stuck_any = true;
      }
      components.push_back(std::move(entry));
    }
    result.output = document(Json{{"t", t}, {"components", std::move(components)}});
    result.exit_code = stuck_any ? kExitCertificate : kExitColored;
  } catch (const PreconditionError& e) {
    result.message = e.what();
  } catch (const BudgetExceeded& e) {
    result.message = e.what();
  } catch (const InvariantError& e) {
    result.exit_code = kExitRejected;
    result.message = std::string("internal invariant failed: ") + e.what();
  }
  return result;
}

CommandResult oracle_command(const Graph& g, int t, const OracleBudget& budget) {
  CommandResult result;
  try {
    bool found = has_odd_expansion(g, t, budget);
    result.output = document(Json{{"odd_minor", found}, {"t", t}});
    result.exit_code = kExitColored;
  } catch (const BudgetExceeded& e) {
    result.message = e.what();
  } catch (const PreconditionError& e) {
    result.message = e.what();
  }
  return result;
}

CommandResult dot_command(const Graph& g, const Json* artifact) {
  CommandResult result;
  std::ostringstream dot;
  std::map<Vertex, std::string> fill;
  std::vector<TreeSubgraph> clusters;
  std::vector<Edge> highlighted;
  try {
    if (artifact && artifact->contains("colors")) {
      auto coloring = coloring_from_json(*artifact);
      if (coloring.colors.size() != static_cast<std::size_t>(g.order())) {
        result.message = "coloring does not match the graph";
        return result;
      }
      std::map<VertexColor, int> slot;
      for (Vertex v = 0; v < g.order(); ++v) {
        auto [it, fresh] = slot.emplace(coloring.colors[v], static_cast<int>(slot.size()));
        fill[v] = kPalette[static_cast<std::size_t>(it->second) % std::size(kPalette)];
      }
    } else if (artifact && artifact->contains("trees")) {
      auto cert = certificate_from_json(*artifact);
      if (!certificate_fits(g, cert)) {
        result.message = "certificate does not match the graph";
        return result;
      }
      clusters = cert.trees;
      for (const auto& [v, c] : cert.coloring) fill[v] = c == 1 ? "white" : "gray";
      for (const auto& j : cert.joins) highlighted.push_back(make_edge(j.edge.first, j.edge.second));
    } else if (artifact) {
      result.message = "artifact is neither a coloring nor a certificate";
      return result;
    }
  } catch (const FormatError& e) {
    result.message = e.what();
    return result;
  }

  dot << "graph G {\n";
  if (!fill.empty()) dot << "  node [style=filled];\n";
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    dot << "  subgraph cluster_" << i << " {\n    label=\"T" << i << "\";\n";
    for (Vertex v : clusters[i].vertices) dot << "    " << v << ";\n";
    dot << "  }\n";
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    dot << "  " << v;
    if (auto it = fill.find(v); it != fill.end()) dot << " [fillcolor=\"" << it->second << "\"]";
    dot << ";\n";
  }
  std::vector<Edge> tree_edges;
  for (const auto& tree : clusters) tree_edges.insert(tree_edges.end(), tree.edges.begin(), tree.edges.end());
  std::sort(tree_edges.begin(), tree_edges.end());
  std::sort(highlighted.begin(), highlighted.end());
  for (const auto& [u, v] : g.edges()) {
    dot << "  " << u << " -- " << v;
    if (std::binary_search(highlighted.begin(), highlighted.end(), Edge{u, v})) {
      dot << " [color=red, penwidth=2]";
    } else if (std::binary_search(tree_edges.begin(), tree_edges.end(), Edge{u, v})) {
      dot << " [penwidth=2]";
    }
    dot << ";\n";
  }
  dot << "}\n";
  result.output = dot.str();
  result.exit_code = kExitColored;
  return result;
}

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

int emit(const CommandResult& r, const std::string& output_path, std::ostream& out, std::ostream& err) {
  if (!r.output.empty()) {
    if (output_path.empty()) {
      out << r.output;
    } else {
      std::ofstream file(output_path);
      if (!file) {
        err << "cannot write " << output_path << "\n";
        return kExitUsage;
      }
      file << r.output;
    }
  }
  if (!r.message.empty()) err << r.message << "\n";
  return r.exit_code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifying clustered coloring for graphs without odd K_t minors"};
  app.require_subcommand(1);

  std::string input, format = "edgelist", output, artifact, family;
  int t = 3, n = 0, budget_n = OracleBudget{}.max_n, budget_t = OracleBudget{}.max_t;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool parallel = false, connected = false, verbose = false;

  auto add_graph_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "Graph file")->required();
    cmd->add_option("--format", format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  };

  auto* color = app.add_subcommand("color", "Clustered coloring, or an odd K_t certificate");
  add_graph_input(color);
  color->add_option("--t", t, "Excluded odd minor size (t >= 3)")->required();
  color->add_option("--output", output, "Write the JSON artifact here");
  color->add_option("--seed", seed, "Unused: the pipeline has no randomness");
  color->add_flag("--parallel", parallel, "Decompose connected components concurrently");
  color->add_flag("-v,--verbose", verbose, "Print decomposition statistics to stderr");

  auto* verify = app.add_subcommand("verify", "Check a coloring or certificate against a graph");
  add_graph_input(verify);
  verify->add_option("--artifact", artifact, "Coloring or certificate JSON")->required();
  verify->add_option("--output", output, "Write the coloring report here");

  auto* decomp = app.add_subcommand("decompose", "Print the part decomposition of every component");
  add_graph_input(decomp);
  decomp->add_option("--t", t, "Excluded odd minor size (t >= 3)")->required();
  decomp->add_option("--output", output, "Write the JSON here");

  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen->add_option("--family", family, "gnp, bipartite, cycle, complete or grid")
      ->required()
      ->check(CLI::IsMember({"gnp", "bipartite", "cycle", "complete", "grid"}));
  gen->add_option("--n", n, "Vertex count (grid: side length)")->required();
  gen->add_option("--p", p, "Edge probability for gnp and bipartite");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_flag("--connected", connected, "Link components with random bridges");
  gen->add_option("--output", output, "Write the graph here");

  auto* dot = app.add_subcommand("dot", "Render a graph, optionally with a coloring or certificate, as DOT");
  add_graph_input(dot);
  dot->add_option("--artifact", artifact, "Coloring or certificate JSON");
  dot->add_option("--output", output, "Write the DOT text here");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive odd K_t minor test for tiny graphs");
  add_graph_input(oracle);
  oracle->add_option("--t", t, "Minor size")->required();
  oracle->add_option("--budget-n", budget_n, "Largest admissible vertex count");
  oracle->add_option("--budget-t", budget_t, "Largest admissible t");
  oracle->add_option("--output", output, "Write the JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Graph g;
      if (family == "gnp") g = gnp(n, p, seed);
      else if (family == "bipartite") g = random_bipartite(n, p, seed);
      else if (family == "cycle") g = cycle_graph(n);
      else if (family == "complete") g = complete_graph(n);
      else g = grid_graph(n, n);
      if (connected) g = connect_components(g, seed);
      std::ostringstream text;
      write_edge_list(text, g);
      return emit(CommandResult{kExitColored, text.str(), {}}, output, out, err);
    }

    const Graph g = read_graph_file(input, parse_format(format));
    if (color->parsed()) {
      PipelineTrace trace;
      auto r = color_command(g, t, parallel, &trace);
      if (verbose) {
        std::size_t parts = 0, moves = 0;
        for (const auto& d : trace.completed) parts += d.parts.size();
        for (const auto& call : trace.spanner_calls) moves += static_cast<std::size_t>(call.moves());
        err << "n=" << g.order() << " m=" << g.edge_count() << " completed_components=" << trace.completed.size()
            << " parts=" << parts << " spanner_calls=" << trace.spanner_calls.size() << " moves=" << moves << "\n";
      }
      return emit(r, output, out, err);
    }
    if (decomp->parsed()) return emit(decompose_command(g, t), output, out, err);
    if (oracle->parsed()) {
      return emit(oracle_command(g, t, OracleBudget{budget_n, budget_t, OracleBudget{}.node_limit}), output, out, err);
    }
    if (verify->parsed()) {
      const Json j = read_json_file(artifact);
      return emit(verify_command(g, j), output, out, err);
    }
    if (dot->parsed()) {
      if (artifact.empty()) return emit(dot_command(g, nullptr), output, out, err);
      const Json j = read_json_file(artifact);
      return emit(dot_command(g, &j), output, out, err);
    }
  } catch (const GraphError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oddcolor::cli
