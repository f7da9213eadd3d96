#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rrg/json.hpp"

#include "rrg/graph.hpp"

namespace rrg {

/// Reads either the edge-list form (an "n" line, then one "u v" pair per
/// line; blank lines and '#' comments ignored) or the JSON form
/// {"n": int, "edges": [[u,v],...]}. The form is chosen by the first
/// non-blank character. Throws ParseError naming the offending token.
Graph parse_graph(std::string_view text);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// Canonical edge-list text: "n\n" then "u v\n" per edge in sorted order.
std::string to_edge_list(const Graph& g);
/// Canonical compact JSON text, edges sorted.
std::string to_json_text(const Graph& g);

std::string read_text_file(const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);

} // namespace rrg
