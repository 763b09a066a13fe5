#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kts/graph.hpp"

namespace kts {

struct KTreeVerdict {
  bool yes = false;
  std::vector<std::pair<int, int>> tree_edges;  // n-1 edges when yes
  std::optional<VertexSet> win_violation;       // S with w(G-S) >= (k-2)|S|+3, when found
};

inline bool verify_tree_certificate(const Graph& g, int k,
                                    const std::vector<std::pair<int, int>>& edges) {
  int n = g.order();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
    if (!g.has_edge(u, v)) return false;
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;  // cycle
    parent[static_cast<std::size_t>(ru)] = rv;
    if (++deg[static_cast<std::size_t>(u)] > k) return false;
    if (++deg[static_cast<std::size_t>(v)] > k) return false;
  }
  return true;  // n-1 acyclic edges => spanning and connected
}

// Smallest Win-violating set (ties broken by lexicographically least index
// list), or absent. Enumerates subsets in increasing size.
inline std::optional<VertexSet> find_win_violation(const Graph& g, int k) {
  int n = g.order();
  if (n > 20) throw std::invalid_argument("find_win_violation limited to n <= 20");
  std::vector<int> idx;
  for (int size = 1; size < n; ++size) {
    idx.assign(static_cast<std::size_t>(size), 0);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      VertexSet mask = 0;
      for (int v : idx) mask |= std::uint64_t{1} << v;
      if (components_after_removal(g, mask) >= (k - 2) * size + 3) return mask;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

namespace detail {

// Exact search over spanning trees as rooted parent assignments: every
// non-root vertex picks a neighbor as parent; n-1 acyclic edges form a
// spanning tree, and each tree arises exactly once (parents point toward
// the root). Union-find with rollback rejects cycles; degree budgets and a
// stranded-vertex check prune.
struct KTreeSearch {
  const Graph& g;
  int k;
  int n;
  std::vector<int> order;   // non-root vertices, most constrained first
  std::vector<int> parent;  // DSU, union by size, no path compression
  std::vector<int> size;
  std::vector<int> deg;
  std::vector<std::pair<int, int>> edges;

  explicit KTreeSearch(const Graph& graph, int kk) : g(graph), k(kk), n(graph.order()) {
    parent.resize(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    size.assign(static_cast<std::size_t>(n), 1);
    deg.assign(static_cast<std::size_t>(n), 0);
  }

  int find(int v) const {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  }

  bool feasible(std::size_t next) const {
    // every still-unattached vertex needs a neighbor that can take an edge
    for (std::size_t i = next; i < order.size(); ++i) {
      int v = order[i];
      bool ok = false;
      for (int u : set_members(g.neighbors(v)))
        if (deg[static_cast<std::size_t>(u)] < k) { ok = true; break; }
      if (!ok) return false;
    }
    return true;
  }

  bool search(std::size_t i) {
    if (i == order.size()) return true;
    int v = order[i];
    if (deg[static_cast<std::size_t>(v)] >= k) return false;
    for (int u : set_members(g.neighbors(v))) {
      if (deg[static_cast<std::size_t>(u)] >= k) continue;
      int ru = find(u), rv = find(v);
      if (ru == rv) continue;
      if (size[static_cast<std::size_t>(ru)] < size[static_cast<std::size_t>(rv)]) std::swap(ru, rv);
      parent[static_cast<std::size_t>(rv)] = ru;
      size[static_cast<std::size_t>(ru)] += size[static_cast<std::size_t>(rv)];
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
      edges.emplace_back(u, v);
      if (feasible(i + 1) && search(i + 1)) return true;
      edges.pop_back();
      --deg[static_cast<std::size_t>(u)];
      --deg[static_cast<std::size_t>(v)];
      size[static_cast<std::size_t>(ru)] -= size[static_cast<std::size_t>(rv)];
      parent[static_cast<std::size_t>(rv)] = rv;
    }
    return false;
  }
};

}  // namespace detail

inline KTreeVerdict has_spanning_ktree(const Graph& g, int k) {
  int n = g.order();
  if (k < 2) throw std::invalid_argument("has_spanning_ktree needs k >= 2");
  if (n > 16) throw std::invalid_argument("has_spanning_ktree limited to n <= 16");
  if (!is_connected(g)) throw std::invalid_argument("has_spanning_ktree needs a connected graph");
  KTreeVerdict verdict;
  if (n == 1) {
    verdict.yes = true;
    return verdict;
  }
  detail::KTreeSearch search(g, k);
  int root = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  for (int v = 0; v < n; ++v)
    if (v != root) search.order.push_back(v);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  if (search.search(0)) {
    verdict.yes = true;
    verdict.tree_edges = search.edges;
  } else if (n <= 20) {
    verdict.win_violation = find_win_violation(g, k);
  }
  return verdict;
}

}  // namespace kts
