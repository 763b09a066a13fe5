#include <doctest.h>

#include <cmath>

#include "kts/extremal.hpp"
#include "kts/quotient.hpp"
#include "kts/spectra.hpp"

using namespace kts;

namespace {

Partition split_join_partition(const SplitJoinParams& p) {
  Partition part;
  VertexSet sblk = 0, ablk = 0, bblk = 0;
  for (int v = 0; v < p.s; ++v) sblk |= std::uint64_t{1} << v;
  for (int v = p.s; v < p.s + p.a; ++v) ablk |= std::uint64_t{1} << v;
  for (int v = p.s + p.a; v < p.order(); ++v) bblk |= std::uint64_t{1} << v;
  part.blocks.push_back(sblk);
  if (ablk) part.blocks.push_back(ablk);
  if (bblk) part.blocks.push_back(bblk);
  return part;
}

}  // namespace

TEST_CASE("singleton partition reproduces D") {
  DistMatrix d = all_pairs_distances(path_graph(4));
  Partition p;
  for (int v = 0; v < 4; ++v) p.blocks.push_back(std::uint64_t{1} << v);
  QuotientMatrix q = quotient_matrix(d, p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(q.at(i, j) == doctest::Approx(d.at(i, j)));
  CHECK(is_equitable(d, p));
}

TEST_CASE("K3 v 9K1 block quotient") {
  DistMatrix d = all_pairs_distances(build_split_join({3, 0, 9}));
  QuotientMatrix q = quotient_matrix(d, split_join_partition({3, 0, 9}));
  REQUIRE(q.r == 2);
  CHECK(q.at(0, 0) == doctest::Approx(2));
  CHECK(q.at(0, 1) == doctest::Approx(9));
  CHECK(q.at(1, 0) == doctest::Approx(3));
  CHECK(q.at(1, 1) == doctest::Approx(16));
  CHECK(std::abs(quotient_lambda1(q) - (9 + 2 * std::sqrt(19.0))) < 1e-10);
}

TEST_CASE("G-tilde three-block quotient at (s,k,n)=(1,4,12)") {
  DistMatrix d = all_pairs_distances(gtilde(12, 4, 1));
  QuotientMatrix q = quotient_matrix(d, split_join_partition({1, 7, 4}));
  REQUIRE(q.r == 3);
  double expected[3][3] = {{0, 7, 4}, {1, 6, 8}, {1, 14, 6}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(q.at(i, j) == doctest::Approx(expected[i][j]));
  CHECK(is_equitable(d, q.r == 3 ? split_join_partition({1, 7, 4}) : Partition{}));
}

TEST_CASE("G-sharp(9) quotient gives (13+sqrt(177))/2") {
  DistMatrix d = all_pairs_distances(gsharp(9));
  QuotientMatrix q = quotient_matrix(d, split_join_partition({2, 0, 7}));
  REQUIRE(q.r == 2);
  CHECK(q.at(0, 0) == doctest::Approx(1));
  CHECK(q.at(0, 1) == doctest::Approx(7));
  CHECK(q.at(1, 0) == doctest::Approx(2));
  CHECK(q.at(1, 1) == doctest::Approx(12));
  CHECK(std::abs(quotient_lambda1(q) - (13 + std::sqrt(177.0)) / 2) < 1e-10);
}

TEST_CASE("P4 halves are not equitable") {
  DistMatrix d = all_pairs_distances(path_graph(4));
  Partition p{{vertex_set({0, 1}), vertex_set({2, 3})}};
  CHECK_FALSE(is_equitable(d, p));
}

TEST_CASE("zero quotient matrix") {
  QuotientMatrix q;
  q.r = 2;
  q.b = {0, 0, 0, 0};
  CHECK(quotient_lambda1(q) == doctest::Approx(0.0));
}

TEST_CASE("invalid partitions rejected") {
  DistMatrix d = all_pairs_distances(path_graph(3));
  CHECK_THROWS_AS(quotient_matrix(d, Partition{{vertex_set({0, 1})}}), std::invalid_argument);
  CHECK_THROWS_AS(quotient_matrix(d, Partition{{vertex_set({0, 1}), vertex_set({1, 2})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(quotient_matrix(d, Partition{{vertex_set({0, 1, 2}), 0}}),
                  std::invalid_argument);
}

TEST_CASE("equitable quotient shares the Perron root") {
  for (int s = 1; s <= 3; ++s)
    for (int a = 0; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) {
        SplitJoinParams sj{s, a, b};
        if (sj.order() < 2) continue;
        DistMatrix d = all_pairs_distances(build_split_join(sj));
        Partition p = split_join_partition(sj);
        REQUIRE(is_equitable(d, p));
        double ql = quotient_lambda1(quotient_matrix(d, p));
        double pl = lambda1(d, 1e-12).lambda1;
        CHECK(std::abs(ql - pl) <= 1e-8);
      }
}

TEST_CASE("quotient eigenvalues embed in the full spectrum") {
  for (auto sj : {SplitJoinParams{2, 3, 4}, {1, 4, 3}, {3, 0, 5}}) {
    DistMatrix d = all_pairs_distances(build_split_join(sj));
    Partition p = split_join_partition(sj);
    REQUIRE(is_equitable(d, p));
    auto qeig = quotient_eigenvalues(quotient_matrix(d, p));
    auto full = full_spectrum(d);
    for (double mu : qeig) {
      double best = 1e30;
      for (double e : full) best = std::min(best, std::abs(e - mu));
      CHECK(best < 1e-6);
    }
  }
}
