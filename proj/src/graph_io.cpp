#include "hpidx/graph_io.hpp"

#include <algorithm>
#include <sstream>

#include "hpidx/errors.hpp"

namespace hpidx {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-';
  });
}

Graph from_edge_list(std::string_view text) {
  GraphBuilder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (nl == std::string_view::npos) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two tokens, found " + std::to_string(tokens.size()));
    }
    for (auto t : tokens) {
      if (!is_valid_token(t)) {
        throw ParseError(line_no, "invalid vertex token '" + std::string(t) + "'");
      }
    }
    if (tokens[0] == "v") {
      builder.add_vertex(std::string(tokens[1]));
    } else {
      if (tokens[0] == tokens[1]) {
        throw Error(ErrorKind::Validation, "line " + std::to_string(line_no) +
                                               ": self-loop at '" + std::string(tokens[0]) + "'");
      }
      builder.add_edge(std::string(tokens[0]), std::string(tokens[1]));
    }
    if (nl == std::string_view::npos) break;
  }
  return builder.build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << "v " << g.name(v) << '\n';
  }
  for (const Edge& e : g.edges()) out << g.name(e.u) << ' ' << g.name(e.v) << '\n';
  return out.str();
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
    line.remove_prefix(kGraph6Header.size());
  }
  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= line.size()) throw ParseError(1, "truncated graph6 string");
    const unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 character");
    return c - 63u;
  };
  std::size_t n = 0;
  if (line.empty()) throw ParseError(1, "empty graph6 string");
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = next();
  } else {
    ++pos;
    std::size_t bytes = 3;
    if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126) {
      ++pos;
      bytes = 6;
    }
    for (std::size_t i = 0; i < bytes; ++i) n = (n << 6) | next();
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (line.size() - pos != groups) throw ParseError(1, "graph6 length mismatch");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  unsigned current = 0;
  int remaining = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (remaining == 0) {
        current = next();
        remaining = 6;
      }
      --remaining;
      if ((current >> remaining) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph::from_index_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned current = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      current = (current << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + 63));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> graphs_from_graph6(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line == kGraph6Header) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.detail());
    }
  }
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return from_edge_list(text);
  auto graphs = graphs_from_graph6(text);
  if (graphs.size() != 1) {
    throw ParseError(1, "expected exactly one graph6 graph, found " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

std::string to_dot(const Graph& g, std::string_view name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q.push_back('\\');
      q.push_back(c);
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << quote(g.name(v)) << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << quote(g.name(e.u)) << " -- " << quote(g.name(e.v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hpidx
