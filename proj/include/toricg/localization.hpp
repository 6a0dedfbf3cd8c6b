#pragma once

#include "toricg/geometry.hpp"
#include "toricg/toric.hpp"

#include <random>
#include <set>
#include <vector>

namespace toricg {

/// Front/back classification of the faces of a full-dimensional cone with
/// respect to a direction v. Face ids are those of `PolyhedralCone::lattice`
/// (the bottom face is the zero cone).
struct ConeDecomposition {
  RationalVector v;
  std::vector<bool> back;   // Delta_{<=0}: x + t v stays in sigma for small t > 0
  std::vector<bool> front;  // Delta_{>=0}: same for -v
  std::vector<bool> fixed;  // Delta_0: v in span(tau)
  std::vector<FaceId> min_fixed;
};

namespace detail {

inline std::vector<FaceId> facets_containing(const FaceLattice& L, FaceId f) {
  std::vector<FaceId> out;
  const auto facet_ids = L.faces_of_dim(L.dim() - 1);
  for (std::size_t k = 0; k < facet_ids.size(); ++k)
    if (L.leq(f, facet_ids[k])) out.push_back(k);
  return out;
}

}  // namespace detail

/// Exact classification: tau is a back face iff every facet of sigma containing
/// tau has inward normal n with <n, v> >= 0; front faces use -v. Delta_0 is
/// computed independently by a rank test.
inline ConeDecomposition classify_faces(const PolyhedralCone& sigma, const RationalVector& v) {
  if (v.size() != sigma.ambient_dim) throw InputError("direction has wrong dimension");
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
    throw InputError("direction must be nonzero");
  if (sigma.lattice.dim() < 1) throw InputError("cone must have dimension >= 2");
  const auto& L = sigma.lattice;
  ConeDecomposition D;
  D.v = v;
  D.back.assign(L.size(), false);
  D.front.assign(L.size(), false);
  D.fixed.assign(L.size(), false);
  std::vector<int> sign(sigma.inward_normals.size());
  for (std::size_t k = 0; k < sign.size(); ++k) {
    Rational s = dot(sigma.inward_normals[k], v);
    sign[k] = s > 0 ? 1 : (s < 0 ? -1 : 0);
  }
  for (FaceId f = 0; f < L.size(); ++f) {
    bool back = true, front = true;
    for (auto k : detail::facets_containing(L, f)) {
      if (sign[k] < 0) back = false;
      if (sign[k] > 0) front = false;
    }
    D.back[f] = back;
    D.front[f] = front;
    D.fixed[f] = f != L.bottom() && in_span(sigma.generators(f), v);
  }
  for (FaceId f = 0; f < L.size(); ++f) {
    if (!D.fixed[f]) continue;
    bool minimal = true;
    for (FaceId g : L.strictly_below(f))
      if (D.fixed[g]) minimal = false;
    if (minimal) D.min_fixed.push_back(f);
  }
  return D;
}

/// Smallest face of Delta_0 above the back face tau.
inline FaceId tau_plus_v(const PolyhedralCone& sigma, const ConeDecomposition& D, FaceId tau) {
  const auto& L = sigma.lattice;
  if (!D.back.at(tau)) throw InputError("tau_plus_v: face is not a back face");
  VertexSet meet = VertexSet::full(L.n_vertices());
  bool any = false;
  for (FaceId g = 0; g < L.size(); ++g)
    if (D.fixed[g] && L.leq(tau, g)) {
      meet &= L.face(g).vertices;
      any = true;
    }
  if (!any) throw Error("tau_plus_v: no face of Delta_0 above a back face");
  auto f = L.find(meet);
  if (!f || !D.fixed[*f]) throw Error("tau_plus_v: Delta_0 faces above tau have no smallest element");
  return *f;
}

/// The face whose relative interior contains x + t v for x in relint(tau) and
/// small t > 0: the intersection of the facets through tau parallel to v.
inline FaceId tau_plus_v_geometric(const PolyhedralCone& sigma, const RationalVector& v, FaceId tau) {
  const auto& L = sigma.lattice;
  const auto facet_ids = L.faces_of_dim(L.dim() - 1);
  VertexSet meet = VertexSet::full(L.n_vertices());
  for (auto k : detail::facets_containing(L, tau)) {
    Rational s = dot(sigma.inward_normals[k], v);
    if (s < 0) throw InputError("tau_plus_v_geometric: face is not a back face");
    if (s == 0) meet &= L.face(facet_ids[k]).vertices;
  }
  auto f = L.find(meet);
  if (!f) throw Error("tau_plus_v_geometric: facet intersection is not a face");
  return *f;
}

struct GeneralizedMonotonicity {
  Integer lhs, rhs;
  bool ok() const { return lhs >= rhs; }
};

/// g(sigma, 1) >= sum over minimal tau in Delta_0 of g(tau, 1) g(sigma/tau, 1).
inline GeneralizedMonotonicity check_generalized_monotonicity(const PolyhedralCone& sigma, const ConeDecomposition& D,
                                                              ToricTable& T) {
  GeneralizedMonotonicity r;
  r.lhs = T.g_polytope().eval(1);
  for (FaceId tau : D.min_fixed) r.rhs += T.g_face(tau).eval(1) * T.g_quotient(tau).eval(1);
  (void)sigma;
  return r;
}

inline GeneralizedMonotonicity check_generalized_monotonicity(const PolyhedralCone& sigma, const RationalVector& v) {
  ToricTable T(sigma.lattice);
  return check_generalized_monotonicity(sigma, classify_faces(sigma, v), T);
}

/// Verdicts for the structural properties of the decomposition.
struct FrontBackProperties {
  bool fixed_is_intersection = false;  // Delta_0 = Delta_{<=0} cap Delta_{>=0}
  bool coface_closed = false;          // (1)
  bool plus_v_ok = false;              // (2) total, agrees with the geometric face, surjective
  bool plus_closure_ok = false;        // (3) [Delta_+] = Delta \ Delta_{<=0}
  bool projection_injective = false;   // (4) conewise injective on [Delta_+]
  bool symmetric = false;              // Delta_{>=0}(v) = Delta_{<=0}(-v)
  bool all() const {
    return fixed_is_intersection && coface_closed && plus_v_ok && plus_closure_ok && projection_injective && symmetric;
  }
};

inline FrontBackProperties check_front_and_back(const PolyhedralCone& sigma, const ConeDecomposition& D) {
  const auto& L = sigma.lattice;
  FrontBackProperties p;
  p.fixed_is_intersection = true;
  for (FaceId f = 0; f < L.size(); ++f)
    if (D.fixed[f] != (D.back[f] && D.front[f])) p.fixed_is_intersection = false;

  p.coface_closed = true;
  for (FaceId f = 0; f < L.size(); ++f)
    for (FaceId g : L.strictly_above(f)) {
      if (D.back[f] && !D.back[g]) p.coface_closed = false;
      if (D.front[f] && !D.front[g]) p.coface_closed = false;
      if (D.fixed[f] && !D.fixed[g]) p.coface_closed = false;
    }

  p.plus_v_ok = true;
  std::vector<bool> hit(L.size(), false);
  for (FaceId f = 0; f < L.size(); ++f) {
    if (!D.back[f]) continue;
    try {
      FaceId a = tau_plus_v(sigma, D, f);
      FaceId b = tau_plus_v_geometric(sigma, D.v, f);
      if (a != b || (D.fixed[f] && a != f)) p.plus_v_ok = false;
      hit[a] = true;
    } catch (const Error&) {
      p.plus_v_ok = false;
    }
  }
  for (FaceId f = 0; f < L.size(); ++f)
    if (D.fixed[f] && !hit[f]) p.plus_v_ok = false;

  // Delta_+ = front \ fixed; its face closure must be exactly the non-back faces
  std::vector<bool> closure(L.size(), false);
  for (FaceId f = 0; f < L.size(); ++f) {
    if (!(D.front[f] && !D.fixed[f])) continue;
    closure[f] = true;
    for (FaceId g : L.strictly_below(f)) closure[g] = true;
  }
  p.plus_closure_ok = true;
  for (FaceId f = 0; f < L.size(); ++f)
    if (closure[f] != !D.back[f]) p.plus_closure_ok = false;

  // projection along v is injective on span(tau) iff v is not in span(tau)
  p.projection_injective = true;
  for (FaceId f = 0; f < L.size(); ++f) {
    if (!closure[f] || f == L.bottom()) continue;
    auto gens = sigma.generators(f);
    if (exact_rank(gens) != static_cast<std::size_t>(L.face(f).dim + 1) || in_span(gens, D.v))
      p.projection_injective = false;
  }

  RationalVector minus = D.v;
  for (auto& x : minus) x = -x;
  auto E = classify_faces(sigma, minus);
  p.symmetric = E.back == D.front && E.front == D.back && E.fixed == D.fixed;
  return p;
}

/// Deterministic direction sample: a fixed pseudo-random integer stream, the
/// relative-interior points of a spread of faces, and vectors in the
/// intersection of the spans of pairs of faces (these produce nontrivial
/// Delta_0 strata). At most `cap` directions.
inline std::vector<RationalVector> sample_directions(const PolyhedralCone& sigma, std::uint64_t seed, std::size_t cap = 24) {
  const auto& L = sigma.lattice;
  const std::size_t n = sigma.ambient_dim;
  std::set<RationalVector> seen;
  std::vector<RationalVector> out;
  auto add = [&](RationalVector v) {
    if (out.size() >= cap) return;
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return;
    auto p = primitive(v);
    RationalVector q(p.begin(), p.end());
    if (seen.insert(q).second) out.push_back(std::move(q));
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int i = 0; i < 6; ++i) {
    RationalVector v(n);
    for (auto& x : v) x = coord(rng);
    add(std::move(v));
  }
  // relative interiors of faces, cycling through dimensions
  for (int k = 0; k <= L.dim() && out.size() < cap; ++k) {
    auto fs = L.faces_of_dim(k);
    if (fs.empty()) continue;
    FaceId f = fs[rng() % fs.size()];
    RationalVector v(n);
    for (const auto& g : sigma.generators(f))
      for (std::size_t c = 0; c < n; ++c) v[c] += g[c];
    add(std::move(v));
  }
  // span intersections of pairs of disjoint-ish faces
  std::vector<FaceId> mids;
  for (FaceId f = 1; f < L.top(); ++f)
    if (L.face(f).dim >= 1) mids.push_back(f);
  for (int attempt = 0; attempt < 64 && out.size() < cap && mids.size() >= 2; ++attempt) {
    FaceId a = mids[rng() % mids.size()], b = mids[rng() % mids.size()];
    if (a == b) continue;
    auto ga = sigma.generators(a), gb = sigma.generators(b);
    // solve sum x_i ga_i - sum y_j gb_j = 0
    RationalMatrix M(n, ga.size() + gb.size());
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < ga.size(); ++i) M(c, i) = ga[i][c];
      for (std::size_t j = 0; j < gb.size(); ++j) M(c, ga.size() + j) = -gb[j][c];
    }
    for (const auto& z : kernel_basis(M)) {
      RationalVector v(n);
      for (std::size_t i = 0; i < ga.size(); ++i)
        for (std::size_t c = 0; c < n; ++c) v[c] += z[i] * ga[i][c];
      add(std::move(v));
      break;
    }
  }
  return out;
}

}  // namespace toricg
