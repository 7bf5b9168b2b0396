#pragma once

#include <string>
#include <string_view>

#include "bbapsp/graph.hpp"

namespace bbapsp {

// DIMACS-style shortest-path format:
//   c <comment>
//   p sp <n> <m>
//   a <tail> <head> <length>      (1-based ids, decimal length)
// Negative lengths are rejected unless `allow_negative` is set. The number of
// arc lines must equal <m>; merges and dropped self-loops happen afterwards.
Graph parse_graph_file(std::string_view text, bool allow_negative = false);

std::string write_graph_file(const Graph& g);

Graph read_graph_path(const std::string& path, bool allow_negative = false);
void write_graph_path(const Graph& g, const std::string& path);

}  // namespace bbapsp
