#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "domcycle/graph.hpp"

namespace domcycle {

class Graph6Error : public GraphError {
 public:
  using GraphError::GraphError;
};

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::size_t graph6_payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

/// Bit-exact graph6: size header, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, offset 63.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Decodes one graph6 line. A leading ">>graph6<<" and trailing CR/LF are accepted.
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(detail::kGraph6Header)) text.remove_prefix(detail::kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 line");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error("graph6: byte " + std::to_string(b) + " outside 63..126");
  }

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw Graph6Error("graph6: malformed or oversized header");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    if (n < 63) throw Graph6Error("graph6: non-minimal long header");
    pos = 4;
  }
  if (n < 1 || n > kMaxOrder) throw Graph6Error("graph6: order " + std::to_string(n) + " outside 1..64");

  const std::size_t want = detail::graph6_payload_bytes(n);
  const std::size_t have = text.size() - pos;
  if (have < want) throw Graph6Error("graph6: truncated payload");
  if (have > want) throw Graph6Error("graph6: trailing bytes after payload");

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = text[pos + want - 1] - 63;
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
  }
  return b.build();
}

/// One parsed corpus entry, remembering where it came from.
struct Graph6Record {
  std::size_t line = 0;
  std::string text;
  Graph graph;
};

/// Reads a whole graph6 stream; blank lines are skipped. Parse failures name the line.
inline std::vector<Graph6Record> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Record> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      std::string_view body = line;
      if (body.starts_with(detail::kGraph6Header)) body.remove_prefix(detail::kGraph6Header.size());
      out.push_back({lineno, std::string(body), std::move(g)});
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace domcycle
