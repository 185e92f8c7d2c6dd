#include "lss/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lss {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::vector<int>> read_edge_lines(std::istream& in, int& n) {
  std::string line;
  bool have_header = false;
  std::vector<std::vector<int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view view = trim(line);
    if (view.empty()) continue;
    std::istringstream fields{std::string(view)};
    if (!have_header) {
      std::string key;
      fields >> key;
      if (key != "n" || !(fields >> n) || n < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n <count>'");
      }
      have_header = true;
      continue;
    }
    std::vector<int> edge;
    std::string tok;
    while (fields >> tok) edge.push_back(parse_int(tok));
    if (edge.empty()) continue;
    edges.push_back(std::move(edge));
  }
  if (!have_header) throw ParseError("missing header 'n <count>'");
  return edges;
}

Clutter build_clutter(int n, std::vector<std::vector<int>> edges) {
  try {
    return Clutter(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph build_graph(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : edges) {
    if (e.size() != 2) throw ParseError("graph edges must have exactly two endpoints");
    pairs.emplace_back(e[0], e[1]);
  }
  try {
    return Graph(n, pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Graph parse_graph_text(std::istream& in) {
  int n = 0;
  auto edges = read_edge_lines(in, n);
  return build_graph(n, edges);
}

Clutter parse_clutter_text(std::istream& in) {
  int n = 0;
  auto edges = read_edge_lines(in, n);
  return build_clutter(n, std::move(edges));
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
    return build_graph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

Clutter clutter_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
    return build_clutter(n, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("clutter JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

nlohmann::json to_json(const Clutter& h) { return {{"n", h.vertex_count()}, {"edges", h.edges()}}; }

Clutter parse_inline_edges(std::string_view text, std::optional<int> n) {
  text = trim(text);
  std::vector<std::vector<int>> edges;
  if (!text.empty() && text != "empty") {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t stop = text.find_first_of(",;", start);
      if (stop == std::string_view::npos) stop = text.size();
      std::string_view item = trim(text.substr(start, stop - start));
      if (!item.empty()) {
        std::vector<int> edge;
        std::size_t p = 0;
        while (p < item.size()) {
          while (p < item.size() && (item[p] == '-' || std::isspace(static_cast<unsigned char>(item[p])))) ++p;
          std::size_t q = p;
          while (q < item.size() && item[q] != '-' && !std::isspace(static_cast<unsigned char>(item[q]))) ++q;
          if (q > p) edge.push_back(parse_int(item.substr(p, q - p)));
          p = q;
        }
        if (edge.size() < 2) throw ParseError("edge '" + std::string(item) + "' needs at least two vertices");
        edges.push_back(std::move(edge));
      }
      start = stop + 1;
    }
  }
  int count = n.value_or(0);
  if (!n) {
    for (const auto& e : edges)
      for (int v : e) count = std::max(count, v);
  }
  return build_clutter(count, std::move(edges));
}

namespace {

std::optional<Graph> try_named(std::string_view name) {
  if (name == "nrad1") {
    return Graph(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 6}, {3, 5}, {4, 6}});
  }
  if (name == "nrad2") {
    return Graph(7, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 7}, {3, 4}, {3, 7}, {4, 5}, {5, 6}, {6, 7}});
  }
  if (name == "nrad3") {
    // Right side j~ is vertex 5 + j.
    return Graph(9, {{1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 8}, {4, 9}, {5, 6}, {5, 9}});
  }
  if (name.size() < 2) return std::nullopt;
  const char kind = name.front();
  std::string_view rest = name.substr(1);
  auto number = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
  };
  if (kind == 'K') {
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      auto m = number(rest.substr(0, comma));
      auto k = number(rest.substr(comma + 1));
      if (!m || !k || *m < 1 || *k < 1) return std::nullopt;
      return Graph::complete_bipartite(*m, *k);
    }
    auto k = number(rest);
    if (!k || *k < 1) return std::nullopt;
    return Graph::complete(*k);
  }
  auto k = number(rest);
  if (!k) return std::nullopt;
  switch (kind) {
    case 'B':
      if (*k >= 1) return Graph::crown(*k);
      break;
    case 'C':
      if (*k >= 3) return Graph::cycle(*k);
      break;
    case 'P':
      if (*k >= 2) return Graph::path(*k);
      break;
    case 'E':
      if (*k >= 0) return Graph::edgeless(*k);
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace

Graph named_graph(std::string_view name) {
  auto g = try_named(trim(name));
  if (!g) throw ParseError("unknown named graph '" + std::string(name) + "'");
  return *g;
}

bool is_named_graph(std::string_view name) { return try_named(trim(name)).has_value(); }

Clutter read_clutter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return clutter_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }
  std::istringstream stream(text);
  return parse_clutter_text(stream);
}

}  // namespace lss
