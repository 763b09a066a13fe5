#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kts/graph.hpp"

namespace kts {

struct disconnected_error : std::runtime_error {
  disconnected_error() : std::runtime_error("distance matrix undefined for a disconnected graph") {}
};

struct convergence_error : std::runtime_error {
  convergence_error(double est, double res)
      : std::runtime_error("eigensolver failed to converge"), estimate(est), residual(res) {}
  double estimate;
  double residual;
};

// Exact hop distances of a connected graph; entries fit in 16 bits (n <= 64).
struct DistMatrix {
  int n = 0;
  std::vector<std::uint16_t> d;  // row-major

  std::uint16_t at(int i, int j) const {
    return d[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
};

inline DistMatrix all_pairs_distances(const Graph& g) {
  int n = g.order();
  DistMatrix m;
  m.n = n;
  m.d.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  VertexSet full = g.all_vertices();
  for (int src = 0; src < n; ++src) {
    VertexSet seen = std::uint64_t{1} << src;
    VertexSet frontier = seen;
    std::uint16_t level = 0;
    while (frontier) {
      ++level;
      VertexSet next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.neighbors(v);
      }
      next &= ~seen;
      for (VertexSet s = next; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        m.d[static_cast<std::size_t>(src) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = level;
      }
      seen |= next;
      frontier = next;
    }
    if (seen != full) throw disconnected_error();
  }
  return m;
}

inline std::uint64_t wiener(const DistMatrix& d) {
  std::uint64_t w = 0;
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j) w += d.at(i, j);
  return w;
}

struct SpectralResult {
  double lambda1 = 0;
  std::vector<double> perron;  // unit Euclidean norm, all entries positive
  int iterations = 0;
  double residual = 0;
};

// Dominant eigenpair by power iteration with Rayleigh-quotient estimate.
// All-ones start vector is positive, so the iteration converges to the
// Perron direction of the nonnegative irreducible symmetric matrix.
inline SpectralResult lambda1(const DistMatrix& d, double rel_tol = 1e-10, int max_iter = 100000) {
  int n = d.n;
  if (n < 2) throw std::invalid_argument("lambda1 needs n >= 2");
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  double lam = 0, res = 0;
  for (int it = 1; it <= max_iter; ++it) {
    for (int i = 0; i < n; ++i) {
      double acc = 0;
      const std::uint16_t* row = &d.d[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)];
      for (int j = 0; j < n; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = acc;
    }
    lam = 0;
    for (int i = 0; i < n; ++i) lam += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    res = 0;
    for (int i = 0; i < n; ++i)
      res = std::max(res, std::abs(y[static_cast<std::size_t>(i)] - lam * x[static_cast<std::size_t>(i)]));
    if (res <= rel_tol * lam) return {lam, x, it, res};
    double norm = 0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / norm;
  }
  throw convergence_error(lam, res);
}

// All eigenvalues by cyclic Jacobi rotations, sorted nonincreasing.
inline std::vector<double> full_spectrum(const DistMatrix& d) {
  int n = d.n;
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = d.at(i, j);
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (std::sqrt(off) < 1e-12) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0) continue;
        double theta = (at(q, q) - at(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = at(i, p), aiq = at(i, q);
          at(i, p) = c * aip - s * aiq;
          at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = at(p, i), aqi = at(q, i);
          at(p, i) = c * api - s * aqi;
          at(q, i) = s * api + c * aqi;
        }
      }
    }
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

}  // namespace kts
