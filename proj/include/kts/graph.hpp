#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kts {

// Vertex subsets are bitmasks over indices 0..n-1 (whole toolkit caps n at 64).
using VertexSet = std::uint64_t;

inline VertexSet vertex_set(std::initializer_list<int> vs) {
  VertexSet m = 0;
  for (int v : vs) m |= std::uint64_t{1} << v;
  return m;
}

inline std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

// Simple undirected graph: order + one adjacency bitset row per vertex.
// Values are treated as immutable once built; builders use add_edge.
class Graph {
public:
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > 64) throw std::invalid_argument("graph order must be in [1,64]");
  }

  int order() const { return n_; }

  bool has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return (adj_[static_cast<std::size_t>(i)] >> j) & 1u;
  }

  void add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    adj_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
  }

  void remove_edge(int i, int j) {
    if (!has_edge(i, j)) throw std::invalid_argument("edge does not exist");
    adj_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
    adj_[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << i);
  }

  VertexSet neighbors(int i) const {
    check_vertex(i);
    return adj_[static_cast<std::size_t>(i)];
  }

  int degree(int i) const { return std::popcount(neighbors(i)); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  VertexSet all_vertices() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool operator==(const Graph& o) const = default;

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// g2's vertices are shifted by g1's order; g1 keeps its indices.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.order(), n2 = g2.order();
  Graph g(n1 + n2);
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j)
      if (g1.has_edge(i, j)) g.add_edge(i, j);
  for (int i = 0; i < n2; ++i)
    for (int j = i + 1; j < n2; ++j)
      if (g2.has_edge(i, j)) g.add_edge(n1 + i, n1 + j);
  return g;
}

inline Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  int n1 = g1.order();
  for (int i = 0; i < n1; ++i)
    for (int j = n1; j < g.order(); ++j) g.add_edge(i, j);
  return g;
}

inline Graph delete_edge(const Graph& g, int i, int j) {
  Graph h = g;
  h.remove_edge(i, j);
  return h;
}

// Connected components of the subgraph induced on V minus `removed`.
inline int components_after_removal(const Graph& g, VertexSet removed) {
  VertexSet rest = g.all_vertices() & ~removed;
  int count = 0;
  while (rest) {
    ++count;
    VertexSet comp = rest & -rest;
    for (;;) {
      VertexSet grown = comp;
      VertexSet frontier = comp;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        grown |= g.neighbors(v) & rest;
      }
      if (grown == comp) break;
      comp = grown;
    }
    rest &= ~comp;
  }
  return count;
}

inline bool is_connected(const Graph& g) { return components_after_removal(g, 0) == 1; }

namespace detail {

// Label-independent vertex colors: start from degrees, refine by the sorted
// multiset of neighbor colors until the number of classes stops growing.
inline std::vector<int> refined_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  auto normalize = [&](std::vector<std::vector<int>>& keys) {
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(v)]) -
          sorted.begin());
    return static_cast<int>(sorted.size());
  };
  {
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) keys[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)]};
    normalize(keys);
  }
  int classes = 0;
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u : set_members(g.neighbors(v))) nb.push_back(color[static_cast<std::size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      keys[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)]};
      keys[static_cast<std::size_t>(v)].insert(keys[static_cast<std::size_t>(v)].end(), nb.begin(), nb.end());
    }
    int c = normalize(keys);
    if (c == classes) break;
    classes = c;
  }
  return color;
}

// u and v are twins when swapping them is an automorphism.
inline bool twins(const Graph& g, int u, int v) {
  VertexSet mask = ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
  return (g.neighbors(u) & mask) == (g.neighbors(v) & mask);
}

}  // namespace detail

// Canonical code: lexicographically minimal upper-triangle adjacency encoding
// over all permutations respecting the refined color classes, ordered by
// color. Identical codes iff isomorphic. Capped at n <= 12.
inline std::string canonical_code(const Graph& g) {
  int n = g.order();
  if (n > 12) throw std::invalid_argument("canonical_code limited to n <= 12");
  std::vector<int> color = detail::refined_colors(g);
  // position p must host a vertex of color cell_color[p]
  std::vector<int> cell_color(static_cast<std::size_t>(n));
  {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    cell_color = sorted;
  }
  int nbits = n * (n - 1) / 2;
  std::vector<std::uint8_t> best(static_cast<std::size_t>(nbits), 0x7f);
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(nbits), 0);
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto&& self, int p, int bitpos, bool tight) -> void {
    if (p == n) {
      if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end()))
        best = cur;
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || color[static_cast<std::size_t>(v)] != cell_color[static_cast<std::size_t>(p)])
        continue;
      bool skip = false;
      for (int u : tried)
        if (detail::twins(g, u, v)) { skip = true; break; }
      if (skip) continue;
      tried.push_back(v);
      int bp = bitpos;
      bool t2 = tight, worse = false;
      for (int q = 0; q < p; ++q, ++bp) {
        std::uint8_t b = g.has_edge(perm[static_cast<std::size_t>(q)], v) ? 1 : 0;
        cur[static_cast<std::size_t>(bp)] = b;
        if (t2) {
          if (b > best[static_cast<std::size_t>(bp)]) { worse = true; break; }
          if (b < best[static_cast<std::size_t>(bp)]) t2 = false;
        }
      }
      if (worse) continue;
      used[static_cast<std::size_t>(v)] = 1;
      perm[static_cast<std::size_t>(p)] = v;
      self(self, p + 1, bitpos + p, t2);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0, 0, true);

  std::string code;
  code.push_back(static_cast<char>(n));
  std::uint8_t acc = 0;
  int fill = 0;
  for (int i = 0; i < nbits; ++i) {
    acc = static_cast<std::uint8_t>((acc << 1) | best[static_cast<std::size_t>(i)]);
    if (++fill == 8) {
      code.push_back(static_cast<char>(acc));
      acc = 0;
      fill = 0;
    }
  }
  if (fill) code.push_back(static_cast<char>(acc << (8 - fill)));
  return code;
}

}  // namespace kts
