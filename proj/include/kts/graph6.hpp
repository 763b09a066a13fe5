#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kts/graph.hpp"

namespace kts {

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
  std::size_t byte_offset;
};

// graph6 short form, n <= 62: header byte n+63, then ceil(n(n-1)/2 / 6)
// bytes in [63,126] packing the strict upper triangle in column-major pair
// order (0,1),(0,2),(1,2),(0,3),..., most significant bit first.
inline Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw parse_error("empty graph6 line", 0);
  int header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 126) throw parse_error("header byte out of range", 0);
  int n = header - 63;
  if (n > 62) throw parse_error("order above 62 not supported", 0);
  if (n < 1) throw parse_error("order must be at least 1", 0);
  std::size_t body = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (text.size() != 1 + body)
    throw parse_error("bad length: expected " + std::to_string(1 + body) + " bytes, got " +
                          std::to_string(text.size()),
                      text.size());
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      std::size_t byte = 1 + bit / 6;
      int c = static_cast<unsigned char>(text[byte]);
      if (c < 63 || c > 126) throw parse_error("body byte out of range", byte);
      if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
    }
  }
  // trailing pad bits must be zero
  for (std::size_t b = bit; b < body * 6; ++b) {
    std::size_t byte = 1 + b / 6;
    int c = static_cast<unsigned char>(text[byte]);
    if (c < 63 || c > 126) throw parse_error("body byte out of range", byte);
    if ((c - 63) >> (5 - b % 6) & 1) throw parse_error("nonzero padding bit", byte);
  }
  return g;
}

inline std::string write_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 short form limited to n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, fill = 0;
  auto flush = [&] {
    out.push_back(static_cast<char>(acc + 63));
    acc = 0;
    fill = 0;
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++fill == 6) flush();
    }
  if (fill) {
    acc <<= 6 - fill;
    flush();
  }
  return out;
}

// First line "n m", then m lines "u v" with 0 <= u < v < n.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw parse_error(msg + " on line " + std::to_string(lineno), lineno);
  };
  int n = 0;
  long m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!(ls >> n >> m)) fail("expected header \"n m\"");
    std::string rest;
    if (ls >> rest) fail("trailing tokens in header");
    break;
  }
  if (m < 0) throw parse_error("missing header", 0);
  if (n < 1 || n > 64) throw parse_error("order must be in [1,64]", lineno);
  Graph g(n);
  long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    int u, v;
    std::istringstream ls(line);
    if (!(ls >> u >> v)) fail("expected edge \"u v\"");
    std::string rest;
    if (ls >> rest) fail("trailing tokens in edge line");
    if (u == v) fail("self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
    if (u > v) fail("edges must satisfy u < v");
    if (g.has_edge(u, v)) fail("duplicate edge");
    g.add_edge(u, v);
    ++seen;
  }
  if (seen != m)
    throw parse_error("edge count mismatch: header says " + std::to_string(m) + ", found " +
                          std::to_string(seen),
                      lineno);
  return g;
}

}  // namespace kts
