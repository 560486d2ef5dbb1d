#pragma once

#include <string>
#include <string_view>

#include "diamaug/graph.hpp"

namespace diamaug {

// Graph text format:
//   # optional comment lines
//   p <n> <m>
//   e <u> <v>      (exactly m lines, 0-based ids)
// The parser accepts edges in any order and orientation; the serializer
// writes them sorted with u < v, so serialize_graph is canonical.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Edge-set files reuse the `e <u> <v>` lines without a header. Ids are not
// bounds-checked here; that happens against the graph they are applied to.
EdgeSet parse_edge_set(std::string_view text);
std::string serialize_edge_set(const EdgeSet& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace diamaug
