#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "kts/graph.hpp"

using namespace kts;

namespace {

// brute-force isomorphism over all n! permutations, test-only oracle
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  int n = a.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph labeled_graph(int n, unsigned bits) {
  Graph g(n);
  int e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++e)
      if (bits >> e & 1) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(complete(1).order() == 1);
  CHECK(complete(1).edge_count() == 0);
  CHECK(complete(4).edge_count() == 6);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("paths") {
  CHECK(path_graph(2).edge_count() == 1);
  CHECK(path_graph(3).edge_count() == 2);
  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("disjoint union") {
  Graph g = disjoint_union(complete(1), complete(1));
  CHECK(g.order() == 2);
  CHECK(g.edge_count() == 0);
  Graph h = disjoint_union(complete(3), disjoint_union(complete(1), complete(1)));
  CHECK(h.order() == 5);
  CHECK(h.edge_count() == 3);
  CHECK(components_after_removal(h, 0) == 3);
  CHECK_FALSE(is_connected(disjoint_union(complete(2), complete(2))));
}

TEST_CASE("join") {
  Graph star = join(complete(1), disjoint_union(disjoint_union(complete(1), complete(1)),
                                                disjoint_union(complete(1),
                                                               disjoint_union(complete(1), complete(1)))));
  CHECK(star.order() == 6);
  CHECK(star.edge_count() == 5);
  CHECK(star.degree(0) == 5);

  Graph nine(9);
  Graph k3v9 = join(complete(3), nine);
  CHECK(k3v9.order() == 12);
  CHECK(k3v9.edge_count() == 30);

  CHECK(join(complete(3), complete(4)) == complete(7));
  CHECK(is_connected(join(Graph(5), Graph(3))));
}

TEST_CASE("join edge count identity") {
  Graph g1 = path_graph(4), g2 = cycle_graph(5);
  CHECK(join(g1, g2).edge_count() == g1.edge_count() + g2.edge_count() + 4 * 5);
}

TEST_CASE("delete_edge") {
  Graph p3 = delete_edge(complete(3), 0, 1);
  CHECK(p3.edge_count() == 2);
  CHECK(brute_isomorphic(p3, path_graph(3)));
  CHECK(brute_isomorphic(delete_edge(cycle_graph(5), 4, 0), path_graph(5)));
  Graph star = join(complete(1), Graph(4));
  CHECK_FALSE(is_connected(delete_edge(star, 0, 1)));
  CHECK_THROWS_AS(delete_edge(path_graph(3), 0, 2), std::invalid_argument);
}

TEST_CASE("components_after_removal") {
  CHECK(components_after_removal(complete(5), 0) == 1);
  // G*(8,5) = K1 v (K2 u 5K1), apex at index 0
  Graph g = join(complete(1), disjoint_union(complete(2), Graph(5)));
  CHECK(components_after_removal(g, vertex_set({0})) == 6);
  CHECK(components_after_removal(cycle_graph(6), vertex_set({0, 3})) == 2);
  CHECK(components_after_removal(complete(3), complete(3).all_vertices()) == 0);
}

TEST_CASE("canonical_code basics") {
  Graph p3a = path_graph(3);
  Graph p3b(3);  // relabeled: center at 0
  p3b.add_edge(0, 1);
  p3b.add_edge(0, 2);
  CHECK(canonical_code(p3a) == canonical_code(p3b));
  CHECK(canonical_code(complete(3)) != canonical_code(p3a));
  CHECK_THROWS_AS(canonical_code(complete(13)), std::invalid_argument);
}

TEST_CASE("canonical_code star construction orders") {
  // G*(7,5) with n-k-1 = 1 collapses to the star K_{1,6}
  Graph a = join(complete(1), disjoint_union(complete(1), Graph(5)));
  Graph b = join(Graph(6), complete(1));  // apex last
  CHECK(canonical_code(a) == canonical_code(b));
}

TEST_CASE("join is commutative up to isomorphism") {
  Graph g1 = path_graph(3), g2 = cycle_graph(4);
  CHECK(canonical_code(join(g1, g2)) == canonical_code(join(g2, g1)));
}

TEST_CASE("canonical_code matches brute-force isomorphism, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    std::vector<Graph> reps;
    for (unsigned bits = 0; bits < (1u << pairs); ++bits) {
      Graph g = labeled_graph(n, bits);
      std::string code = canonical_code(g);
      bool matched = false;
      for (const Graph& r : reps) {
        bool same_code = canonical_code(r) == code;
        bool iso = brute_isomorphic(r, g);
        REQUIRE(same_code == iso);
        if (iso) matched = true;
      }
      if (!matched) reps.push_back(g);
    }
  }
}

TEST_CASE("canonical_code matches brute-force isomorphism, sampled n = 6") {
  std::vector<Graph> reps;
  // deterministic LCG sample of labeled 6-vertex graphs
  unsigned long long x = 0x2545F4914F6CDD1DULL;
  for (int trial = 0; trial < 200; ++trial) {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    Graph g = labeled_graph(6, static_cast<unsigned>(x >> 33) & 0x7fffu);
    std::string code = canonical_code(g);
    for (const Graph& r : reps) REQUIRE((canonical_code(r) == code) == brute_isomorphic(r, g));
    bool dup = false;
    for (const Graph& r : reps)
      if (canonical_code(r) == code) dup = true;
    if (!dup) reps.push_back(g);
  }
}
