#include "oddcolor/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "oddcolor/errors.hpp"

namespace oddcolor {

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw GraphError("unknown graph format '" + std::string(name) + "'");
}

namespace {

long long read_count(std::istringstream& line, const char* what, int line_no) {
  long long value = 0;
  if (!(line >> value) || value < 0) {
    throw GraphError("line " + std::to_string(line_no) + ": expected non-negative " + what);
  }
  return value;
}

void expect_end(std::istringstream& line, int line_no) {
  std::string extra;
  if (line >> extra) throw GraphError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string text;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    if (blank(text)) continue;
    std::istringstream line(text);
    if (n < 0) {
      n = read_count(line, "vertex count", line_no);
      m = read_count(line, "edge count", line_no);
      expect_end(line, line_no);
      if (n > 100'000'000) throw GraphError("vertex count too large");
      edges.reserve(static_cast<std::size_t>(std::min(m, 10'000'000LL)));
      continue;
    }
    long long u = read_count(line, "endpoint", line_no);
    long long v = read_count(line, "endpoint", line_no);
    expect_end(line, line_no);
    if (u >= n || v >= n) throw GraphError("line " + std::to_string(line_no) + ": vertex out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw GraphError("missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_dimacs(std::istream& in) {
  std::string text;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    if (blank(text)) continue;
    std::istringstream line(text);
    std::string tag;
    line >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw GraphError("line " + std::to_string(line_no) + ": second problem line");
      std::string kind;
      line >> kind;
      if (kind != "edge" && kind != "col") {
        throw GraphError("line " + std::to_string(line_no) + ": unsupported problem type '" + kind + "'");
      }
      n = read_count(line, "vertex count", line_no);
      m = read_count(line, "edge count", line_no);
      expect_end(line, line_no);
      if (n > 100'000'000) throw GraphError("vertex count too large");
    } else if (tag == "e") {
      if (n < 0) throw GraphError("line " + std::to_string(line_no) + ": edge before problem line");
      long long u = read_count(line, "endpoint", line_no);
      long long v = read_count(line, "endpoint", line_no);
      expect_end(line, line_no);
      if (u < 1 || v < 1 || u > n || v > n) {
        throw GraphError("line " + std::to_string(line_no) + ": vertex out of range 1.." + std::to_string(n));
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw GraphError("line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw GraphError("missing 'p edge n m' line");
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphError("problem line announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path.string());
  return read_graph(in, format);
}

}  // namespace oddcolor
