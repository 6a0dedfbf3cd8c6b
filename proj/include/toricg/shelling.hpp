#pragma once

#include "toricg/geometry.hpp"
#include "toricg/toric.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace toricg {

/// A line shelling of the boundary of a full-dimensional polytope.
/// `facet_order[j]` indexes GeometricPolytope::facets (equivalently the
/// lattice's facets in id order).
struct Shelling {
  std::vector<std::size_t> facet_order;
  RationalVector base_point;
  RationalVector direction;
  int attempts = 1;  // directions tried, including the accepted one
};

namespace detail {

// Ordering along x(t) = p + t v, or nullopt if v is not generic for P.
inline std::optional<std::vector<std::size_t>> line_order(const GeometricPolytope& P, const RationalVector& p,
                                                          const RationalVector& v) {
  struct Crossing {
    std::size_t facet;
    bool positive;
    Rational t;
  };
  std::vector<Crossing> cs;
  for (std::size_t i = 0; i < P.facets.size(); ++i) {
    const auto& F = P.facets[i];
    const Rational av = dot(F.normal, v);
    if (av == 0) return std::nullopt;
    cs.push_back({i, av > 0, (F.offset - dot(F.normal, p)) / av});
  }
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i].t == cs[j].t) return std::nullopt;
  std::sort(cs.begin(), cs.end(), [](const Crossing& a, const Crossing& b) {
    if (a.positive != b.positive) return a.positive;
    return a.t < b.t;
  });
  std::vector<std::size_t> order;
  for (const auto& c : cs) order.push_back(c.facet);
  return order;
}

}  // namespace detail

/// Bruggesser-Mani line shelling through the vertex average. Facets crossed
/// moving along +v come first (in crossing order), then the facets reached by
/// returning from -infinity. A non-generic direction is replaced by a
/// pseudo-random rational direction drawn from `seed`; after `max_attempts`
/// directions the construction gives up.
inline Shelling line_shelling(const GeometricPolytope& P, RationalVector direction, std::uint64_t seed,
                              int max_attempts = 64) {
  if (P.dim < 1) throw InputError("line shelling needs a polytope of dimension >= 1");
  const auto d = static_cast<std::size_t>(P.dim);
  if (direction.size() != d)
    throw InputError("shelling direction has " + std::to_string(direction.size()) + " coordinates, expected " +
                     std::to_string(d));
  Shelling S;
  S.base_point = P.barycenter();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-997, 997);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    if (auto order = detail::line_order(P, S.base_point, direction)) {
      S.facet_order = std::move(*order);
      S.direction = std::move(direction);
      S.attempts = attempt;
      return S;
    }
    for (auto& x : direction) x = Rational(coord(rng), 1 + (coord(rng) & 63));
  }
  throw Error("line shelling: no generic direction found after " + std::to_string(max_attempts) + " attempts");
}

/// Draws the first direction from the seed as well.
inline Shelling line_shelling(const GeometricPolytope& P, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5DEECE66DULL);
  std::uniform_int_distribution<long> coord(-997, 997);
  RationalVector v(static_cast<std::size_t>(std::max(P.dim, 0)));
  for (auto& x : v) x = Rational(coord(rng), 1 + (coord(rng) & 63));
  return line_shelling(P, std::move(v), seed);
}

/// Face subset of a lattice (indexed by FaceId).
using FaceSubset = std::vector<bool>;

/// All faces contained in at least one of the given facets (empty face included
/// whenever the list is nonempty).
inline FaceSubset complex_of(const FaceLattice& L, const std::vector<FaceId>& facets) {
  FaceSubset in(L.size(), false);
  for (FaceId f : facets) {
    in[f] = true;
    for (FaceId g : L.strictly_below(f)) in[g] = true;
  }
  return in;
}

inline bool is_subcomplex(const FaceLattice& L, const FaceSubset& s) {
  for (FaceId f = 0; f < L.size(); ++f) {
    if (!s[f]) continue;
    for (FaceId g : L.strictly_below(f))
      if (!s[g]) return false;
  }
  return true;
}

/// h(I, J, t) = sum over F in I \ J of g(F, t) (t-1)^{d-1-dim F}.
inline Polynomial relative_h(ToricTable& T, const FaceSubset& I, const FaceSubset& J) {
  const auto& L = T.lattice();
  if (I.size() != L.size() || J.size() != L.size()) throw InputError("relative_h: face subset of wrong size");
  if (!is_subcomplex(L, I) || !is_subcomplex(L, J)) throw InputError("relative_h: subsets must be closed under taking faces");
  for (FaceId f = 0; f < L.size(); ++f)
    if (J[f] && !I[f]) throw InputError("relative_h: J is not contained in I");
  const int d = L.dim();
  Polynomial h;
  for (FaceId f = 0; f < L.size(); ++f) {
    if (!I[f] || J[f]) continue;
    h += T.g_face(f) * detail::t_minus_one_power(d - 1 - L.face(f).dim);
  }
  return h;
}

inline Polynomial relative_h(const FaceLattice& L, const FaceSubset& I, const FaceSubset& J) {
  ToricTable T(L);
  return relative_h(T, I, J);
}

struct ShellingStep {
  std::size_t facet;
  Polynomial local_h;
  Polynomial running_sum;
};

struct ShellingReport {
  std::vector<ShellingStep> steps;
  Polynomial toric_h;
  bool sums_to_h = false;
  bool nonnegative = false;
  bool partial_unions_ok = false;  // pure codim-one intersection proxy
  std::vector<std::string> problems;

  bool ok() const { return sums_to_h && nonnegative && partial_unions_ok; }
  std::vector<Polynomial> local_polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& s : steps) out.push_back(s.local_h);
    return out;
  }
};

/// Local h-polynomials h(I_j, I_{j-1}, t) of a shelling, with certification
/// that they sum to h(P, t) and have nonnegative coefficients. The partial
/// unions are checked by the proxy: for j >= 2, F_j meets I_{j-1} in a
/// nonempty pure (d-2)-dimensional subcomplex of its boundary, proper unless
/// j is the last step.
inline ShellingReport shelling_decomposition(const GeometricPolytope& P, const Shelling& S) {
  const auto& L = P.lattice;
  const auto facet_ids = L.faces_of_dim(L.dim() - 1);
  if (S.facet_order.size() != facet_ids.size()) throw InputError("shelling does not list every facet");
  ToricTable T(L);
  ShellingReport R;
  R.toric_h = T.h_polytope();
  R.nonnegative = true;
  R.partial_unions_ok = true;
  const int d = L.dim();

  FaceSubset prev(L.size(), false);
  std::vector<FaceId> so_far;
  Polynomial running;
  for (std::size_t j = 0; j < S.facet_order.size(); ++j) {
    const FaceId Fj = facet_ids.at(S.facet_order[j]);
    if (j > 0) {
      // faces of F_j already present, excluding F_j itself
      std::vector<FaceId> common;
      for (FaceId g : L.strictly_below(Fj))
        if (prev[g] && g != L.bottom()) common.push_back(g);
      std::size_t boundary_faces = L.strictly_below(Fj).size() - 1;
      // for d = 1 the facets are points meeting in the empty face
      bool pure = !common.empty() || d == 1;
      for (FaceId g : common) {
        if (L.face(g).dim == d - 2) continue;
        bool covered = false;
        for (FaceId h : common)
          if (L.face(h).dim == d - 2 && L.leq(g, h)) covered = true;
        if (!covered) pure = false;
      }
      const bool last = j + 1 == S.facet_order.size();
      const bool proper = last ? common.size() == boundary_faces : common.size() < boundary_faces;
      if (!pure || !proper) {
        R.partial_unions_ok = false;
        R.problems.push_back("step " + std::to_string(j + 1) + ": intersection with earlier facets is not a " +
                             std::string(pure ? "proper" : "pure codimension-one") + " subcomplex");
      }
    }
    so_far.push_back(Fj);
    FaceSubset cur = complex_of(L, so_far);
    Polynomial local = relative_h(T, cur, prev);
    for (const auto& c : local.coefficients())
      if (c < 0) {
        R.nonnegative = false;
        R.problems.push_back("step " + std::to_string(j + 1) + ": negative coefficient in " + local.to_string());
        break;
      }
    running += local;
    R.steps.push_back({S.facet_order[j], local, running});
    prev = std::move(cur);
  }
  R.sums_to_h = running == R.toric_h;
  if (!R.sums_to_h) R.problems.push_back("local polynomials sum to " + running.to_string() + ", not " + R.toric_h.to_string());
  return R;
}

}  // namespace toricg
