#pragma once

#include <string>
#include <string_view>

#include "glpdom/graph.hpp"

namespace glpdom {

enum class GraphFormat { graph6, edgelist };

GraphFormat parse_format(std::string_view name);

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// First line "n m", then m lines "u v" (0-based); '#' lines are comments.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat fmt);
std::string emit_graph(const Graph& g, GraphFormat fmt);

}  // namespace glpdom
