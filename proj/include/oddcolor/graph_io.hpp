#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "oddcolor/graph.hpp"

namespace oddcolor {

enum class GraphFormat { EdgeList, Dimacs };

GraphFormat parse_format(std::string_view name);

// "n m" header followed by m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
// "p edge n m" header, "e u v" lines (1-based), "c" comment lines.
Graph read_dimacs(std::istream& in);

void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

Graph read_graph(std::istream& in, GraphFormat format);
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);

}  // namespace oddcolor
