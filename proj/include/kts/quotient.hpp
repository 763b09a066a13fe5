#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kts/graph.hpp"
#include "kts/spectra.hpp"

namespace kts {

// Ordered list of disjoint, nonempty vertex blocks covering 0..n-1.
struct Partition {
  std::vector<VertexSet> blocks;
};

inline void validate_partition(const DistMatrix& d, const Partition& p) {
  VertexSet full = d.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d.n) - 1;
  VertexSet seen = 0;
  for (VertexSet b : p.blocks) {
    if (b == 0) throw std::invalid_argument("partition has an empty block");
    if (b & seen) throw std::invalid_argument("partition blocks overlap");
    if (b & ~full) throw std::invalid_argument("partition block exceeds vertex range");
    seen |= b;
  }
  if (seen != full) throw std::invalid_argument("partition does not cover all vertices");
}

struct QuotientMatrix {
  int r = 0;
  std::vector<double> b;  // row-major average row sums

  double at(int i, int j) const { return b[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)]; }
};

inline QuotientMatrix quotient_matrix(const DistMatrix& d, const Partition& p) {
  validate_partition(d, p);
  int r = static_cast<int>(p.blocks.size());
  QuotientMatrix q;
  q.r = r;
  q.b.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), 0.0);
  for (int i = 0; i < r; ++i) {
    auto rows = set_members(p.blocks[static_cast<std::size_t>(i)]);
    for (int j = 0; j < r; ++j) {
      std::uint64_t sum = 0;
      for (int u : rows)
        for (int v : set_members(p.blocks[static_cast<std::size_t>(j)])) sum += d.at(u, v);
      q.b[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)] =
          static_cast<double>(sum) / static_cast<double>(rows.size());
    }
  }
  return q;
}

inline bool is_equitable(const DistMatrix& d, const Partition& p) {
  validate_partition(d, p);
  for (VertexSet bi : p.blocks) {
    for (VertexSet bj : p.blocks) {
      bool first = true;
      std::uint64_t expected = 0;
      for (int u : set_members(bi)) {
        std::uint64_t sum = 0;
        for (int v : set_members(bj)) sum += d.at(u, v);
        if (first) {
          expected = sum;
          first = false;
        } else if (sum != expected) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace detail {

// Polynomial with descending coefficients, leading coefficient first.
inline double poly_eval(const std::vector<double>& c, double x) {
  double v = 0;
  for (double ci : c) v = v * x + ci;
  return v;
}

inline std::vector<double> poly_derivative(const std::vector<double>& c) {
  int deg = static_cast<int>(c.size()) - 1;
  std::vector<double> out;
  for (int i = 0; i < deg; ++i) out.push_back(c[static_cast<std::size_t>(i)] * (deg - i));
  return out;
}

// All real roots by recursive derivative bracketing; fine for degree <= 4.
inline std::vector<double> poly_real_roots(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  while (c.size() > 1 && c.front() == 0) c.erase(c.begin());
  int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-c[1] / c[0]};
  double bound = 1;
  for (std::size_t i = 1; i < c.size(); ++i) bound = std::max(bound, std::abs(c[i] / c[0]));
  bound += 1;
  std::vector<double> crit = poly_real_roots(poly_derivative(c));
  std::sort(crit.begin(), crit.end());
  std::vector<double> pts{-bound};
  pts.insert(pts.end(), crit.begin(), crit.end());
  pts.push_back(bound);
  std::vector<double> roots;
  auto bisect = [&](double lo, double hi) {
    double flo = poly_eval(c, lo);
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = poly_eval(c, mid);
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
      if (hi - lo < 1e-13 * std::max(1.0, std::abs(mid))) break;
    }
    return 0.5 * (lo + hi);
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i], hi = pts[i + 1];
    double flo = poly_eval(c, lo), fhi = poly_eval(c, hi);
    if (flo == 0) roots.push_back(lo);
    if ((flo < 0) != (fhi < 0) && flo != 0 && fhi != 0) roots.push_back(bisect(lo, hi));
  }
  // even-multiplicity roots sit at critical points where p nearly vanishes
  for (double x : crit) {
    double scale = std::max(1.0, std::pow(bound, deg));
    if (std::abs(poly_eval(c, x)) < 1e-9 * scale) {
      bool dup = false;
      for (double r : roots)
        if (std::abs(r - x) < 1e-9 * std::max(1.0, std::abs(x))) dup = true;
      if (!dup) roots.push_back(x);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// det(xI - B) via Faddeev-LeVerrier, descending coefficients.
inline std::vector<double> char_poly(const QuotientMatrix& q) {
  int r = q.r;
  std::vector<double> coeffs{1.0};
  std::vector<double> mk = q.b;
  for (int k = 1; k <= r; ++k) {
    double tr = 0;
    for (int i = 0; i < r; ++i) tr += mk[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)];
    double ck = tr / k;
    coeffs.push_back(-ck);
    if (k == r) break;
    // mk1 = B * (mk - ck I)
    std::vector<double> tmp = mk;
    for (int i = 0; i < r; ++i) tmp[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)] -= ck;
    std::vector<double> next(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), 0.0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        double acc = 0;
        for (int l = 0; l < r; ++l)
          acc += q.b[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) + static_cast<std::size_t>(l)] *
                 tmp[static_cast<std::size_t>(l) * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)] = acc;
      }
    mk = next;
  }
  return coeffs;
}

}  // namespace detail

// Real eigenvalues of the quotient matrix via characteristic-polynomial
// root isolation (only needed for equitable partitions of a symmetric
// matrix, where every eigenvalue is real).
inline std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
  if (q.r < 1 || q.r > 4) throw std::invalid_argument("quotient eigenvalues limited to r in [1,4]");
  return detail::poly_real_roots(detail::char_poly(q));
}

inline double quotient_lambda1(const QuotientMatrix& q) {
  auto roots = quotient_eigenvalues(q);
  if (roots.empty()) throw std::runtime_error("no real eigenvalue found for quotient matrix");
  return roots.back();
}

}  // namespace kts
