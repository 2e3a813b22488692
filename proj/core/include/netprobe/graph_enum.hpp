#pragma once

#include <vector>

#include "netprobe/graph.hpp"

namespace netprobe {

// One representative of every isomorphism class of connected simple graphs
// on n nodes (1 <= n <= 8). Counts: 1, 1, 2, 6, 21, 112, 853, 11117.
std::vector<Graph> connected_graph_classes(int n);

}  // namespace netprobe
