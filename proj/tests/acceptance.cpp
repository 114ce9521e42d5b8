// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oddcolor/certificates.hpp"
#include "oddcolor/cli.hpp"
#include "oddcolor/clustered_coloring.hpp"
#include "oddcolor/errors.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/oracle.hpp"
#include "oddcolor/parity_spanner.hpp"
#include "oddcolor/pipeline.hpp"
#include "oddcolor/serialization.hpp"

using namespace oddcolor;

namespace {

struct Case {
  std::string name;
  Graph g;
  int t = 3;
};

struct ColorRun {
  Case input;
  cli::CommandResult result;
  PipelineTrace trace;
  bool verified = false;
  std::string note;
};

constexpr int kGraphs = 500;
constexpr int kTs[] = {3, 4, 5, 6};
constexpr double kPs[] = {0.05, 0.1, 0.3, 0.6};

std::vector<Case> random_corpus() {
  std::mt19937_64 rng(0);
  std::vector<Case> out;
  for (int i = 0; i < kGraphs; ++i) {
    const int n = 1 + static_cast<int>(rng() % 60);
    const double p = kPs[rng() % 4];
    const std::uint64_t seed = rng();
    auto g = connected_gnp(n, p, seed);
    for (int t : kTs) out.push_back({"gnp#" + std::to_string(i) + " n=" + std::to_string(n), g, t});
  }
  return out;
}

ColorRun color_and_verify(const Case& c) {
  ColorRun run{c, {}, {}, false, {}};
  try {
    run.result = cli::color_command(c.g, c.t, false, &run.trace);
    if (run.result.exit_code == cli::kExitColored || run.result.exit_code == cli::kExitCertificate) {
      auto artifact = Json::parse(run.result.output);
      artifact.erase("report");
      auto check = cli::verify_command(c.g, artifact);
      run.verified = check.exit_code == cli::kExitColored;
      if (!run.verified) run.note = check.message;
    } else {
      run.note = "exit " + std::to_string(run.result.exit_code) + ": " + run.result.message;
    }
  } catch (const std::exception& e) {
    run.note = std::string("threw: ") + e.what();
  }
  return run;
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string where(const Case& c) { return c.name + " t=" + std::to_string(c.t); }

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = random_corpus();
  std::vector<ColorRun> runs;
  runs.reserve(corpus.size());
  for (const auto& c : corpus) runs.push_back(color_and_verify(c));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  // 1. Certifying contract.
  {
    int colored = 0, certified = 0;
    std::string first_bad;
    for (const auto& r : runs) {
      const int code = r.result.exit_code;
      colored += code == cli::kExitColored;
      certified += code == cli::kExitCertificate;
      if (!r.verified && first_bad.empty()) first_bad = where(r.input) + " " + r.note;
    }
    const bool ok = first_bad.empty() && seconds < 300.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu runs, %d colored, %d certificates, %.1fs", runs.size(), colored, certified,
                  seconds);
    report(1, ok, first_bad.empty() ? buf : std::string(buf) + "; first failure " + first_bad);
  }

  // 2. Colour count and cluster size, exact.
  {
    int checked = 0;
    std::string bad;
    for (const auto& r : runs) {
      if (r.result.exit_code != cli::kExitColored) continue;
      ++checked;
      const auto j = Json::parse(r.result.output);
      const int t = r.input.t;
      const int colors = j["report"]["colors_used"], cluster = j["report"]["max_component"];
      const int cluster_bound = (t - 2 + 1) / 2;  // ceil((t-2)/2)
      if ((colors > 2 * t - 2 || cluster > cluster_bound) && bad.empty())
        bad = where(r.input) + " colors=" + std::to_string(colors) + " cluster=" + std::to_string(cluster);
    }
    report(2, bad.empty() && checked > 0, std::to_string(checked) + " colorings within bounds" + (bad.empty() ? "" : "; " + bad));
  }

  // 3. Bipartite completeness for t = 3.
  {
    std::mt19937_64 rng(3);
    int ok = 0;
    std::string bad;
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(rng() % 60);
      const double p = kPs[rng() % 4];
      Case c{"bipartite#" + std::to_string(i), connected_bipartite(n, p, rng()), 3};
      auto r = color_and_verify(c);
      if (r.result.exit_code == cli::kExitColored && r.verified) ++ok;
      else if (bad.empty()) bad = where(c) + " exit " + std::to_string(r.result.exit_code);
    }
    report(3, ok == 200, std::to_string(ok) + "/200 exit 0" + (bad.empty() ? "" : "; " + bad));
  }

  // 4. Oracle soundness on small graphs.
  {
    std::vector<Case> small;
    for (const auto& c : corpus)
      if (c.g.order() <= 9 && c.t <= 4) small.push_back(c);
    const std::pair<const char*, Graph> named[] = {{"C5", cycle_graph(5)},
                                                   {"C6", cycle_graph(6)},
                                                   {"K4", complete_graph(4)},
                                                   {"K5", complete_graph(5)},
                                                   {"Petersen", petersen_graph()}};
    for (const auto& [name, g] : named)
      for (int t : {3, 4}) small.push_back({name, g, t});
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
      const int n = 3 + static_cast<int>(rng() % 7);
      auto g = connected_gnp(n, kPs[2 + rng() % 2], rng());
      for (int t : {3, 4}) small.push_back({"small#" + std::to_string(i), g, t});
    }
    const OracleBudget budget{10, 4, OracleBudget{}.node_limit};
    int certs = 0, agreed = 0;
    std::string bad;
    for (const auto& c : small) {
      auto r = color_and_verify(c);
      if (r.result.exit_code != cli::kExitCertificate) continue;
      ++certs;
      bool minor = false;
      try {
        minor = has_odd_expansion(c.g, c.t, budget);
      } catch (const std::exception& e) {
        if (bad.empty()) bad = where(c) + " oracle: " + e.what();
      }
      if (minor && r.verified) ++agreed;
      else if (bad.empty()) bad = where(c) + " oracle disagrees";
    }
    report(4, certs == agreed && bad.empty(),
           std::to_string(agreed) + "/" + std::to_string(certs) + " certificates confirmed on " +
               std::to_string(small.size()) + " small inputs" + (bad.empty() ? "" : "; " + bad));
  }

  // 5. Worked traces, byte for byte.
  {
    const std::string k5_cert =
        R"({"t":3,"trees":[{"vertices":[0,1],"edges":[[0,1]]},{"vertices":[2,3],"edges":[[2,3]]},{"vertices":[4],"edges":[]}],)"
        R"("coloring":{"0":1,"1":2,"2":1,"3":2,"4":1},"joins":[{"pair":[0,1],"edge":[0,2]},{"pair":[0,2],"edge":[0,4]},)"
        R"({"pair":[1,2],"edge":[2,4]}]})"
        "\n";
    const std::string k5_decomposition =
        R"({"t":3,"components":[{"t":3,"parts":[{"index":1,"H":[0,1],"A":[0],"B":[1]},)"
        R"({"index":2,"H":[2,3],"A":[2],"B":[3]}],"stuck":{"component":[4],"adjacent_parts":[1,2]}}]})"
        "\n";
    const std::string k4_coloring =
        R"({"t":3,"colors":[[1,1],[1,2],[2,1],[2,2]],"report":{"colors_used":4,"max_component":1,"max_defect":0}})"
        "\n";
    const std::string c6_coloring =
        R"({"t":3,"colors":[[1,1],[1,2],[1,1],[1,2],[1,1],[1,2]],"report":{"colors_used":2,"max_component":1,"max_defect":0}})"
        "\n";
    std::vector<std::string> bad;
    auto k5 = color_and_verify({"K5", complete_graph(5), 3});
    if (k5.result.exit_code != cli::kExitCertificate || k5.result.output != k5_cert || !k5.verified) bad.push_back("K5 certificate");
    auto k5d = cli::decompose_command(complete_graph(5), 3);
    if (k5d.exit_code != cli::kExitCertificate || k5d.output != k5_decomposition) bad.push_back("K5 stuck state");
    auto k4 = color_and_verify({"K4", complete_graph(4), 3});
    if (k4.result.exit_code != cli::kExitColored || k4.result.output != k4_coloring || !k4.verified) bad.push_back("K4 coloring");
    auto c6 = color_and_verify({"C6", cycle_graph(6), 3});
    if (c6.result.exit_code != cli::kExitColored || c6.result.output != c6_coloring || !c6.verified ||
        c6.trace.completed.size() != 1 || c6.trace.completed[0].parts.size() != 1)
      bad.push_back("C6 coloring");
    std::string detail = "K5 certificate, K5 stuck state, K4 and C6 colorings";
    for (const auto& b : bad) detail += "; mismatch: " + b;
    report(5, bad.empty(), detail);
  }

  // 6. Local search termination and monotonicity.
  {
    std::size_t calls = 0, moves = 0;
    std::string bad;
    for (const auto& r : runs) {
      for (const auto& s : r.trace.spanner_calls) {
        ++calls;
        moves += static_cast<std::size_t>(s.moves());
        if (static_cast<std::size_t>(s.moves()) > s.move_limit && bad.empty()) bad = where(r.input) + " move bound";
        if (s.cross_history.size() != static_cast<std::size_t>(s.moves()) + 1 && bad.empty()) bad = where(r.input) + " history";
        for (std::size_t i = 1; i < s.cross_history.size(); ++i)
          if (s.cross_history[i] <= s.cross_history[i - 1] && bad.empty()) bad = where(r.input) + " not increasing";
      }
      if (r.note.find("refine_triple") != std::string::npos && bad.empty()) bad = where(r.input) + " " + r.note;
    }
    report(6, bad.empty() && calls > 0,
           std::to_string(calls) + " spanner calls, " + std::to_string(moves) + " moves" + (bad.empty() ? "" : "; " + bad));
  }

  // 7. Connector size against exhaustive search.
  {
    std::mt19937_64 rng(7);
    int agree = 0;
    std::string bad;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const double p = kPs[rng() % 4];
      auto g = connected_gnp(n, p, rng());
      std::vector<Vertex> all(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) all[v] = v;
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(static_cast<std::size_t>(std::min<int>(n, 1 + static_cast<int>(rng() % 4))));
      VertexSet terminals(all);
      auto fast = minimum_connector(g, VertexSet::range(n), terminals);
      auto slow = min_connector_bruteforce(g, terminals);
      if (fast.size() == slow.size()) ++agree;
      else if (bad.empty()) bad = "graph #" + std::to_string(i);
    }
    report(7, agree == 100, std::to_string(agree) + "/100 sizes agree" + (bad.empty() ? "" : "; first mismatch " + bad));
  }

  // 8. Decomposition invariants on every completed run.
  {
    std::size_t checked = 0;
    std::string bad;
    for (const auto& r : runs) {
      for (std::size_t i = 0; i < r.trace.completed.size(); ++i) {
        ++checked;
        const auto& g = r.trace.component_graphs[i];
        const auto& d = r.trace.completed[i];
        if (auto why = check_decomposition(g, d, DecompositionState::Completed); why && bad.empty())
          bad = where(r.input) + " " + *why;
        try {
          build_auxiliary(g, d);
        } catch (const InvariantError& e) {
          if (bad.empty()) bad = where(r.input) + " " + e.what();
        }
      }
    }
    report(8, bad.empty() && checked > 0,
           std::to_string(checked) + " completed decompositions recheck clean" + (bad.empty() ? "" : "; " + bad));
  }

  return failures == 0 ? 0 : 1;
}
