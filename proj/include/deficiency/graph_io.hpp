#pragma once

#include "deficiency/graph.hpp"

#include <string>
#include <string_view>

namespace deficiency {

// graph6, as documented with nauty: N(n) header, then the upper triangle
// column by column, six bits per printable byte, zero padded.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Human-authored fixtures: first line n, then one "u v" pair per line.
// Blank lines and lines starting with '#' are ignored.
Graph parse_adjacency_list(std::string_view text);
std::string emit_adjacency_list(const Graph& g);

// Reads either format from a file.
Graph read_graph_file(const std::string& path);

}  // namespace deficiency
