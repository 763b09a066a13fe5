#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kts/graph.hpp"

namespace kts {

// Parameters of K_s v (K_a u b*K1), the shape of every extremal family here.
struct SplitJoinParams {
  int s = 1;  // join clique size, >= 1
  int a = 0;  // large clique part
  int b = 0;  // singleton count

  int order() const { return s + a + b; }
};

// Deterministic layout: [0,s) join clique, [s,s+a) clique part, rest singletons.
inline Graph build_split_join(const SplitJoinParams& p) {
  if (p.s < 1 || p.a < 0 || p.b < 0 || p.order() < 2)
    throw std::invalid_argument("split-join needs s >= 1 and order >= 2");
  int n = p.order();
  Graph g(n);
  for (int i = 0; i < p.s; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  for (int i = p.s; i < p.s + p.a; ++i)
    for (int j = i + 1; j < p.s + p.a; ++j) g.add_edge(i, j);
  return g;
}

// K_s v (K_{n1} u ... u K_{nt}); parts laid out in order after the join clique.
inline Graph build_clique_join(int s, const std::vector<int>& parts) {
  if (s < 1) throw std::invalid_argument("join clique must be nonempty");
  int n = s;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("clique parts must be positive");
    n += p;
  }
  Graph g(n);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  int base = s;
  for (int p : parts) {
    for (int i = base; i < base + p; ++i)
      for (int j = i + 1; j < base + p; ++j) g.add_edge(i, j);
    base += p;
  }
  return g;
}

// G* = K1 v (K_{n-k-1} u k*K1)
inline Graph gstar(int n, int k) {
  if (k < 4 || n < k + 2) throw std::invalid_argument("gstar needs k >= 4 and n >= k+2");
  return build_split_join({1, n - k - 1, k});
}

// G-sharp = K_{(n-3)/3} v ((2n+3)/3)*K1, defined only for n = 0 (mod 3)
inline Graph gsharp(int n) {
  if (n < 6 || n % 3 != 0)
    throw std::invalid_argument("gsharp undefined for this order (needs n >= 6, n = 0 mod 3)");
  return build_split_join({(n - 3) / 3, 0, (2 * n + 3) / 3});
}

// G-tilde = K_s v (K_{n-(k-1)s-2} u ((k-2)s+2)*K1)
inline Graph gtilde(int n, int k, int s) {
  int a = n - (k - 1) * s - 2;
  if (s < 1 || k < 4 || a < 1) throw std::invalid_argument("gtilde needs s >= 1, k >= 4, n >= (k-1)s+3");
  return build_split_join({s, a, (k - 2) * s + 2});
}

// G' = K_s v (K_{n-s-(t-1)} u (t-1)*K1)
inline Graph gprime(int n, int s, int t) {
  int a = n - s - (t - 1);
  if (s < 1 || t < 1 || a < 1) throw std::invalid_argument("gprime needs s,t >= 1 and n >= s+t");
  return build_split_join({s, a, t - 1});
}

enum class PolyTag { F, G, Phi, P, H, Q, R };

// F needs n,k,s; G needs n,k; Phi needs n; P needs n,k,s; H needs k,s
// (variable is n); Q and R need k (variable is s).
struct PolyId {
  PolyTag tag;
  long long n = 0, k = 0, s = 0;
};

// Coefficients are assembled in exact integer arithmetic (phi is scaled by 9
// to clear denominators) and floats enter only at the final evaluation.
inline double eval_poly(const PolyId& id, double x) {
  long long n = id.n, k = id.k, s = id.s;
  switch (id.tag) {
    case PolyTag::F: {
      long long c2 = -(n + (k - 2) * s - 2);
      long long c1 = -(2 * (k - 2) * s * n + 7 * n - (k - 2) * (2 * k - 1) * s * s - (7 * k - 8) * s - 11);
      long long c0 = (k - 2) * s * s * n - 2 * (k - 3) * s * n - 6 * n - (k - 2) * (k - 1) * s * s * s +
                     (2 * k * k - 9 * k + 8) * s * s + 2 * (4 * k - 7) * s + 10;
      return ((x + static_cast<double>(c2)) * x + static_cast<double>(c1)) * x + static_cast<double>(c0);
    }
    case PolyTag::G: {
      long long c2 = -(n + k - 4);
      long long c1 = -((2 * k + 3) * n - 2 * k * k - 2 * k - 5);
      long long c0 = -((k + 2) * n - k * k - 2 * k - 2);
      return ((x + static_cast<double>(c2)) * x + static_cast<double>(c1)) * x + static_cast<double>(c0);
    }
    case PolyTag::Phi: {
      long long c2 = 9;
      long long c1 = -3 * (5 * n - 6);
      long long c0 = 2 * n * n - 21 * n + 9;
      return (static_cast<double>(c2) * x * x + static_cast<double>(c1) * x + static_cast<double>(c0)) / 9.0;
    }
    case PolyTag::P: {
      long long c2 = -(k - 2);
      long long c1 = -2 * (k - 2) * n + (k - 2) * (2 * k - 1) * s + 2 * k * k + 2 * k - 6;
      long long c0 = (k - 2) * s * n - (k - 4) * n - (k - 2) * (k - 1) * s * s + (k * k - 6 * k + 6) * s +
                     k * k + 2 * k - 8;
      return static_cast<double>(c2) * x * x + static_cast<double>(c1) * x + static_cast<double>(c0);
    }
    case PolyTag::H: {
      long long c2 = -3 * (k - 2);
      long long c1 = 2 * k * (k - 2) * s - 2 * k * k + 13 * k - 10;
      long long c0 = -(k - 2) * (k - 1) * s * s + (2 * k * k * k - 6 * k * k + k + 4) * s +
                     k * k * k + 5 * k * k - 11 * k;
      return static_cast<double>(c2) * x * x + static_cast<double>(c1) * x + static_cast<double>(c0);
    }
    case PolyTag::Q: {
      long long c2 = -(k - 1) * (k - 2) * (k - 2);
      long long c1 = -(7 * k * k - 34 * k + 34);
      long long c0 = k * k * k - 3 * k * k - 7 * k + 56;
      return static_cast<double>(c2) * x * x + static_cast<double>(c1) * x + static_cast<double>(c0);
    }
    case PolyTag::R: {
      long long c2 = -(k - 1) * (k - 2) * (k - 2);
      long long c1 = -(3 * k * k - 20 * k + 22);
      long long c0 = k * k * k - k * k + k + 24;
      return static_cast<double>(c2) * x * x + static_cast<double>(c1) * x + static_cast<double>(c0);
    }
  }
  throw std::invalid_argument("malformed PolyId");
}

// The k=4 specialization of h along the line n = 3s+3, as a polynomial in n
// alone; rational accumulation scaled by 3.
inline double h_line_k4(double n) { return (-4.0 * n * n + 34.0 * n + 168.0) / 3.0; }

// rho(G-sharp) = (5n - 6 + sqrt(17n^2 + 24n)) / 6
inline double rho_sharp_closed(int n) {
  if (n < 6 || n % 3 != 0)
    throw std::invalid_argument("rho_sharp_closed undefined for this order");
  double nn = n;
  return (5 * nn - 6 + std::sqrt(17 * nn * nn + 24 * nn)) / 6;
}

// W(G*) = (n^2 + (2k-1)n - k^2 - 3k) / 2; the numerator is always even.
inline std::uint64_t gstar_wiener_closed(int n, int k) {
  if (k < 4 || n < k + 2) throw std::invalid_argument("gstar_wiener_closed needs k >= 4, n >= k+2");
  long long num = static_cast<long long>(n) * n + (2LL * k - 1) * n - static_cast<long long>(k) * k - 3LL * k;
  return static_cast<std::uint64_t>(num / 2);
}

}  // namespace kts
