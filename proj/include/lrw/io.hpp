#pragma once

#include <string>

#include "lrw/graph.hpp"

namespace lrw {

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// ids. Blank lines and '#' comments are ignored.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::string& path);

std::string to_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::string& path);

// One position per line.
std::vector<int> parse_order(const std::string& text, int n);
std::vector<int> read_order(const std::string& path, int n);

} // namespace lrw
