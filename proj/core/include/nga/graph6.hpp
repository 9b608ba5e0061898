#pragma once

#include <string>
#include <string_view>

#include "nga/graph.hpp"

namespace nga {

/// Decode one graph6 line (optional ">>graph6<<" header). Malformed input
/// raises InputError naming the byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (no header, shortest size form).
std::string to_graph6(const Graph& g);

/// Edge-list text format: first line "p q", then q lines "i j".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace nga
