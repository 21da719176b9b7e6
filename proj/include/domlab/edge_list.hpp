#pragma once

#include <iosfwd>
#include <string>

#include "domlab/graph.hpp"

namespace domlab {

/// Parses the edge-list text format: a header line "n m", then m lines
/// "u v" with 0-based endpoints. Lines starting with '#' are comments.
/// Throws std::invalid_argument with the line number on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes the header and the edges sorted with u < v.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace domlab
