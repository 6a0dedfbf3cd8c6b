#pragma once

// Independent reference implementations used only by the tests. They share
// no code paths with the library beyond the lattice data structure itself.

#include "toricg/toricg.hpp"

#include <functional>
#include <map>
#include <random>

namespace oracle {

using namespace toricg;

// (t - 1)^n by repeated multiplication.
inline Polynomial t_minus_one(long n) {
  Polynomial p{1};
  for (long i = 0; i < n; ++i) p = p * Polynomial{-1, 1};
  return p;
}

// Toric h by literal recursion over real sub-lattices (no interval table).
inline Polynomial naive_h(const FaceLattice& L);

inline Polynomial naive_g(const FaceLattice& L) {
  const Polynomial h = naive_h(L);
  const long d = L.dim();
  if (d < 0) return Polynomial{1};
  std::vector<Integer> c;
  for (long k = 0; k <= d / 2; ++k) c.push_back(h[k] - h[k - 1]);
  return Polynomial(c);
}

inline Polynomial naive_h(const FaceLattice& L) {
  const long d = L.dim();
  if (d < 0) return Polynomial{1};
  Polynomial h;
  for (FaceId f = 0; f < L.top(); ++f) h += naive_g(face_lattice_of(L, f)) * t_minus_one(d - 1 - L.face(f).dim);
  return h;
}

// Rank by plain rational row reduction.
inline std::size_t rref_rank(std::vector<RationalVector> rows) {
  std::size_t rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < n; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Number of chains F_1 < ... < F_k with dims exactly `dims`, by depth-first search.
inline Integer chain_count(const FaceLattice& L, const std::vector<int>& dims) {
  std::function<Integer(FaceId, std::size_t)> rec = [&](FaceId f, std::size_t i) -> Integer {
    if (i == dims.size()) return 1;
    Integer s = 0;
    for (FaceId g : L.strictly_above(f))
      if (L.face(g).dim == dims[i]) s += rec(g, i + 1);
    return s;
  };
  return rec(L.bottom(), 0);
}

// Eulerian test straight from the definition, on vertex sets.
inline bool eulerian(const FaceLattice& L) {
  for (FaceId a = 0; a < L.size(); ++a)
    for (FaceId b = 0; b < L.size(); ++b) {
      if (a == b || !L.leq(a, b)) continue;
      long even = 0, odd = 0;
      for (FaceId c = 0; c < L.size(); ++c)
        if (L.leq(a, c) && L.leq(c, b)) (L.face(c).dim % 2 == 0 ? even : odd)++;
      if (even != odd) return false;
    }
  return true;
}

inline Integer binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Small random polynomial with coefficients in [-5, 5].
inline Polynomial random_poly(std::mt19937_64& rng, int max_deg = 4) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return Polynomial(c);
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int sparsity = 3) {
  std::uniform_int_distribution<int> v(-4, 4), z(0, sparsity);
  RationalMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = z(rng) == 0 ? 0 : v(rng);
  return M;
}

// Random full-dimensional point sets: random integer points in a box, retried
// until they affinely span.
inline std::vector<RationalVector> random_points(std::mt19937_64& rng, int d, int n, int box = 3) {
  std::uniform_int_distribution<int> c(-box, box);
  while (true) {
    std::vector<RationalVector> pts(n, RationalVector(d));
    for (auto& p : pts)
      for (auto& x : p) x = c(rng);
    std::vector<RationalVector> diffs;
    for (int i = 1; i < n; ++i) {
      RationalVector w(d);
      for (int k = 0; k < d; ++k) w[k] = pts[i][k] - pts[0][k];
      diffs.push_back(w);
    }
    if (rref_rank(diffs) == static_cast<std::size_t>(d)) return pts;
  }
}

}  // namespace oracle
