#pragma once

#include <iosfwd>
#include <string>

#include "netprobe/graph.hpp"

namespace netprobe {

// Edge-list text format: "N M" on the first line, then M lines "i j" with
// i < j. Reading validates simplicity and connectivity.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace netprobe
