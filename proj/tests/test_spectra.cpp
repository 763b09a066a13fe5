#include <doctest.h>

#include <cmath>

#include "kts/extremal.hpp"
#include "kts/graph.hpp"
#include "kts/harness.hpp"
#include "kts/spectra.hpp"

using namespace kts;

TEST_CASE("all_pairs_distances") {
  DistMatrix k4 = all_pairs_distances(complete(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(k4.at(i, j) == (i == j ? 0 : 1));

  DistMatrix p3 = all_pairs_distances(path_graph(3));
  CHECK(p3.at(0, 1) == 1);
  CHECK(p3.at(0, 2) == 2);
  CHECK(p3.at(1, 2) == 1);
  CHECK(p3.at(1, 1) == 0);

  CHECK_THROWS_AS(all_pairs_distances(disjoint_union(complete(2), complete(2))),
                  disconnected_error);
}

TEST_CASE("split-joins have diameter at most 2") {
  for (int s = 1; s <= 3; ++s)
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) {
        if (s + a + b < 2) continue;
        DistMatrix d = all_pairs_distances(build_split_join({s, a, b}));
        for (int i = 0; i < d.n; ++i)
          for (int j = 0; j < d.n; ++j) CHECK(d.at(i, j) <= 2);
      }
}

TEST_CASE("wiener") {
  CHECK(wiener(all_pairs_distances(complete(4))) == 6);
  CHECK(wiener(all_pairs_distances(path_graph(3))) == 4);
  CHECK(wiener(all_pairs_distances(path_graph(5))) == 20);
  CHECK(wiener(all_pairs_distances(gstar(12, 4))) == 100);
}

TEST_CASE("lambda1 of complete graphs is n-1") {
  SpectralResult r = lambda1(all_pairs_distances(complete(5)));
  CHECK(r.lambda1 == doctest::Approx(4.0).epsilon(1e-10));
  for (double p : r.perron) CHECK(p > 0);
}

TEST_CASE("lambda1 algebraic checkpoints") {
  // K3 v 9K1
  double l1 = lambda1(all_pairs_distances(build_split_join({3, 0, 9}))).lambda1;
  CHECK(std::abs(l1 - (9 + 2 * std::sqrt(19.0))) < 1e-8);
  // K2 v 7K1
  double l2 = lambda1(all_pairs_distances(build_split_join({2, 0, 7}))).lambda1;
  CHECK(std::abs(l2 - (13 + std::sqrt(177.0)) / 2) < 1e-8);
}

TEST_CASE("lambda1 rejects trivial order") {
  DistMatrix d;
  d.n = 1;
  d.d = {0};
  CHECK_THROWS_AS(lambda1(d), std::invalid_argument);
}

TEST_CASE("full_spectrum small cases") {
  auto k2 = full_spectrum(all_pairs_distances(complete(2)));
  CHECK(k2[0] == doctest::Approx(1.0));
  CHECK(k2[1] == doctest::Approx(-1.0));
  auto k3 = full_spectrum(all_pairs_distances(complete(3)));
  CHECK(k3[0] == doctest::Approx(2.0));
  CHECK(k3[1] == doctest::Approx(-1.0));
  CHECK(k3[2] == doctest::Approx(-1.0));
}

TEST_CASE("full_spectrum of P3 tops out at lambda1") {
  // independent oracle: largest root of det(xI - D) for the 3x3 path matrix,
  // char poly x^3 - 6x - 4 by direct expansion
  double lo = 2, hi = 4;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    ((mid * mid * mid - 6 * mid - 4) < 0 ? lo : hi) = mid;
  }
  double oracle = 0.5 * (lo + hi);
  DistMatrix d = all_pairs_distances(path_graph(3));
  CHECK(std::abs(full_spectrum(d)[0] - oracle) < 1e-9);
  CHECK(std::abs(lambda1(d).lambda1 - oracle) < 1e-9);
}

TEST_CASE("spectrum invariants over all connected graphs n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      DistMatrix d = all_pairs_distances(g);
      SpectralResult r = lambda1(d);
      // Wiener bound
      CHECK(r.lambda1 >= 2.0 * static_cast<double>(wiener(d)) / n - 1e-9);
      auto spec = full_spectrum(d);
      double trace = 0;
      for (double e : spec) trace += e;
      CHECK(std::abs(trace) <= 1e-8 * n);
      CHECK(std::abs(spec[0] - r.lambda1) <= 1e-8);
    }
  }
}

TEST_CASE("edge deletion raises lambda1") {
  // C6 minus an edge is P6
  double c6 = lambda1(all_pairs_distances(cycle_graph(6))).lambda1;
  double p6 = lambda1(all_pairs_distances(path_graph(6))).lambda1;
  CHECK(p6 > c6 + 1e-9);
}

TEST_CASE("Perron entries constant on split-join blocks") {
  for (auto [s, a, b] : {std::array<int, 3>{2, 3, 4}, {1, 5, 3}, {3, 0, 6}}) {
    SplitJoinParams p{s, a, b};
    SpectralResult r = lambda1(all_pairs_distances(build_split_join(p)), 1e-12);
    auto same_block = [&](int lo, int hi) {
      for (int v = lo + 1; v < hi; ++v) CHECK(std::abs(r.perron[v] - r.perron[lo]) <= 1e-8);
    };
    same_block(0, s);
    same_block(s, s + a);
    same_block(s + a, p.order());
  }
}
