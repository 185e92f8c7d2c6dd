#pragma once

#include "json.hpp"

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "lss/errors.hpp"
#include "lss/graph.hpp"

namespace lss {

/// Text form: a header line "n <count>" followed by one edge per line
/// ("i j", whitespace separated, 1-based). Blank lines and '#' comments are
/// skipped. Lines with more than two vertices make a clutter.
Graph parse_graph_text(std::istream& in);
Clutter parse_clutter_text(std::istream& in);

/// {"n": int, "edges": [[i, j], ...]}
Graph graph_from_json(const nlohmann::json& j);
/// {"n": int, "edges": [[i, ...], ...]}
Clutter clutter_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Clutter& h);

/// Inline edge list such as "1-2,2-3" or "1 2; 2 3"; hyperedges as "1-2-3".
/// "empty" (or an empty string) yields no edges. Without an explicit vertex
/// count, n is the largest vertex mentioned.
Clutter parse_inline_edges(std::string_view text, std::optional<int> n = std::nullopt);

/// Named instances: "K5", "K3,4", "B4", "C6", "P5", "E4" (edgeless) and the
/// three non-radical examples "nrad1", "nrad2", "nrad3".
Graph named_graph(std::string_view name);
bool is_named_graph(std::string_view name);

/// Reads a graph or clutter file, choosing JSON when the first non-blank
/// character is '{'.
Clutter read_clutter_file(const std::string& path);

}  // namespace lss
