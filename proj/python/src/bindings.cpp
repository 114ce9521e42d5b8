#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddcolor/cli.hpp"
#include "oddcolor/errors.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/oracle.hpp"
#include "oddcolor/serialization.hpp"

namespace py = pybind11;
using namespace oddcolor;

namespace {

Graph to_graph(int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(n, edges); }

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

py::tuple as_result(const cli::CommandResult& r) {
  return py::make_tuple(r.exit_code, r.output.empty() ? py::none() : loads(r.output), r.message);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certifying clustered coloring for graphs without odd K_t minors";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.attr("EXIT_COLORED") = cli::kExitColored;
  m.attr("EXIT_USAGE") = cli::kExitUsage;
  m.attr("EXIT_REJECTED") = cli::kExitRejected;
  m.attr("EXIT_CERTIFICATE") = cli::kExitCertificate;

  m.def(
      "color",
      [](int n, const std::vector<std::pair<int, int>>& edges, int t, bool parallel) {
        auto g = to_graph(n, edges);
        cli::CommandResult r;
        {
          py::gil_scoped_release release;
          r = cli::color_command(g, t, parallel);
        }
        return as_result(r);
      },
      py::arg("n"), py::arg("edges"), py::arg("t"), py::arg("parallel") = false,
      "Returns (exit_code, artifact, message): a coloring (exit 0) or an odd K_t certificate (exit 3).");

  m.def(
      "verify",
      [](int n, const std::vector<std::pair<int, int>>& edges, const py::object& artifact) {
        auto text = py::module_::import("json").attr("dumps")(artifact).cast<std::string>();
        return as_result(cli::verify_command(to_graph(n, edges), Json::parse(text)));
      },
      py::arg("n"), py::arg("edges"), py::arg("artifact"));

  m.def(
      "decompose",
      [](int n, const std::vector<std::pair<int, int>>& edges, int t) {
        return as_result(cli::decompose_command(to_graph(n, edges), t));
      },
      py::arg("n"), py::arg("edges"), py::arg("t"));

  m.def(
      "has_odd_minor",
      [](int n, const std::vector<std::pair<int, int>>& edges, int t, int budget_n) {
        return has_odd_expansion(to_graph(n, edges), t, OracleBudget{budget_n, OracleBudget{}.max_t, OracleBudget{}.node_limit});
      },
      py::arg("n"), py::arg("edges"), py::arg("t"), py::arg("budget_n") = OracleBudget{}.max_n);

  m.def(
      "gnp",
      [](int n, double p, std::uint64_t seed, bool connected) {
        auto g = connected ? connected_gnp(n, p, seed) : oddcolor::gnp(n, p, seed);
        return g.edges();
      },
      py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("connected") = false);
}
