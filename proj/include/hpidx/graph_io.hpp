#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hpidx/graph.hpp"

namespace hpidx {

enum class GraphFormat { EdgeList, Graph6 };

/// Parses the line-oriented edge-list format:
///
///   # comment
///   v <token>          declares an isolated vertex
///   <token> <token>    an undirected edge
///
/// Tokens match [A-Za-z0-9_.-]+. Duplicate edges collapse; a self-loop is a
/// validation error. Malformed lines raise ParseError with the line number.
Graph from_edge_list(std::string_view text);

/// Edge-list text that from_edge_list reads back to the same labeled graph.
/// Isolated vertices are emitted as `v` declarations.
std::string to_edge_list(const Graph& g);

/// Decodes one graph6 string (optional ">>graph6<<" header). Vertices are
/// named "0".."n-1".
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Reads every non-blank graph6 line of a multi-graph file.
std::vector<Graph> graphs_from_graph6(std::string_view text);

/// Parses text in the given format; graph6 input must hold exactly one graph.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Undirected DOT ("graph { ... }") for rendering.
std::string to_dot(const Graph& g, std::string_view name = "G");

bool is_valid_token(std::string_view token);

}  // namespace hpidx
