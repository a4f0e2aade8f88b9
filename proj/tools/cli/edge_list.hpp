#pragma once

#include <string>
#include <string_view>

#include "specbound/graph.hpp"

namespace specbound::cli {

/// One-line edge list: `n: u-v,u-v,...`, e.g. "3: 0-1,1-2,0-2". A graph
/// without edges is written "n:". Throws std::invalid_argument when the
/// line is malformed.
Graph parse_edge_list(std::string_view line);

/// Edges in (u < v) lexicographic order.
std::string to_edge_list(const Graph& g);

}  // namespace specbound::cli
