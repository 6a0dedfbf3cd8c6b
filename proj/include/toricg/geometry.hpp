#pragma once

#include "toricg/face_lattice.hpp"
#include "toricg/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toricg {

/// Facet inequality <normal, x> <= offset in chart coordinates; the normal is a
/// primitive integer vector.
struct Facet {
  RationalVector normal;
  Rational offset;
  VertexSet vertices;
};

/// Convex polytope given by exact rational vertices.
///
/// `vertices` are the ambient coordinates as supplied (deduplicated, non-extreme
/// points dropped). `points` are the same vertices in an affine chart of the
/// affine hull, so `points[i]` has exactly `dim` coordinates and the polytope is
/// full-dimensional there. All downstream geometry works in the chart.
struct GeometricPolytope {
  std::vector<RationalVector> vertices;
  std::vector<RationalVector> points;
  int dim = -1;
  std::vector<Facet> facets;  // aligned with lattice.faces_of_dim(dim - 1)
  FaceLattice lattice = FaceLattice::empty_polytope();

  std::size_t n_vertices() const { return points.size(); }

  RationalVector barycenter() const {
    RationalVector c(static_cast<std::size_t>(std::max(dim, 0)));
    for (const auto& p : points)
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
    for (auto& x : c) x /= static_cast<long>(points.size());
    return c;
  }
};

namespace detail {

inline Integer det_bareiss(std::vector<IntegerVector> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

// Normal of the hyperplane through d-1 difference vectors in Z^d, by cofactor
// expansion. Zero iff the differences are dependent.
inline IntegerVector cofactor_normal(const std::vector<IntegerVector>& diffs, std::size_t d) {
  IntegerVector n(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<IntegerVector> minor;
    minor.reserve(diffs.size());
    for (const auto& r : diffs) {
      IntegerVector row;
      row.reserve(d - 1);
      for (std::size_t c = 0; c < d; ++c)
        if (c != j) row.push_back(r[c]);
      minor.push_back(std::move(row));
    }
    Integer m = det_bareiss(std::move(minor));
    n[j] = (j % 2 == 0) ? m : Integer(-m);
  }
  return n;
}

// Incremental fraction-free echelon basis used to prune dependent prefixes.
struct Echelon {
  std::vector<IntegerVector> rows;
  std::vector<std::size_t> pivots;

  bool try_add(IntegerVector w) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t pc = pivots[i];
      if (w[pc] == 0) continue;
      const Integer f = w[pc], p = rows[i][pc];
      for (std::size_t c = 0; c < w.size(); ++c) w[c] = p * w[c] - f * rows[i][c];
    }
    std::size_t pc = 0;
    while (pc < w.size() && w[pc] == 0) ++pc;
    if (pc == w.size()) return false;
    Integer g = 0;
    for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
      for (auto& x : w) x /= g;
    rows.push_back(std::move(w));
    pivots.push_back(pc);
    return true;
  }
  void pop() {
    rows.pop_back();
    pivots.pop_back();
  }
};

}  // namespace detail

/// Brute-force exact facet enumeration: every hyperplane spanned by d affinely
/// independent vertices that has all vertices on one side is a facet.
/// Scale contract: n <= ~30 vertices, d <= 6.
inline GeometricPolytope facet_enumeration(const std::vector<RationalVector>& input) {
  if (input.empty()) throw InputError("polytope needs at least one vertex");
  const std::size_t m = input[0].size();
  std::vector<RationalVector> pts;
  {
    std::set<RationalVector> seen;
    for (const auto& p : input) {
      if (p.size() != m) throw InputError("vertices have mixed dimensions");
      if (seen.insert(p).second) pts.push_back(p);
    }
  }

  // affine chart: keep coordinates on which the differences have full rank
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(m);
    for (std::size_t c = 0; c < m; ++c) d[c] = pts[i][c] - pts[0][c];
    diffs.push_back(std::move(d));
  }
  const std::size_t d = exact_rank(diffs);
  std::vector<std::size_t> chart_cols;
  {
    std::vector<RationalVector> cols;
    for (std::size_t c = 0; c < m && chart_cols.size() < d; ++c) {
      RationalVector col(diffs.size());
      for (std::size_t r = 0; r < diffs.size(); ++r) col[r] = diffs[r][c];
      auto trial = cols;
      trial.push_back(col);
      if (exact_rank(trial) > cols.size()) {
        cols = std::move(trial);
        chart_cols.push_back(c);
      }
    }
  }
  auto chart = [&](const RationalVector& p) {
    RationalVector q;
    for (auto c : chart_cols) q.push_back(p[c]);
    return q;
  };

  GeometricPolytope P;
  P.dim = static_cast<int>(d);
  if (d == 0) {
    P.vertices = {pts[0]};
    P.points = {RationalVector{}};
    P.facets = {Facet{{}, 0, VertexSet(1)}};
    P.lattice = FaceLattice::from_vertex_facets(1, {{}});
    return P;
  }

  std::vector<RationalVector> chart_pts;
  for (const auto& p : pts) chart_pts.push_back(chart(p));
  const std::size_t n = chart_pts.size();

  // integer copies for exact cofactor arithmetic (uniform scaling)
  Integer scale = 1;
  for (const auto& p : chart_pts)
    for (const auto& x : p) scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(x)));
  std::vector<IntegerVector> ip(n, IntegerVector(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      Rational s = chart_pts[i][c] * scale;
      ip[i][c] = boost::multiprecision::numerator(s);
    }

  struct Found {
    IntegerVector normal;
    Integer offset;
    VertexSet verts;
  };
  std::vector<Found> found;
  std::set<IntegerVector> normals;

  std::vector<std::size_t> chosen;
  detail::Echelon ech;
  auto leaf = [&]() {
    VertexSet s = VertexSet::of(n, chosen);
    for (const auto& f : found)
      if (s.is_subset_of(f.verts)) return;
    std::vector<IntegerVector> dv;
    for (std::size_t k = 1; k < chosen.size(); ++k) {
      IntegerVector v(d);
      for (std::size_t c = 0; c < d; ++c) v[c] = ip[chosen[k]][c] - ip[chosen[0]][c];
      dv.push_back(std::move(v));
    }
    IntegerVector nrm = detail::cofactor_normal(dv, d);
    Integer g = 0;
    for (const auto& x : nrm) g = boost::multiprecision::gcd(g, x);
    if (g == 0) return;
    for (auto& x : nrm) x /= g;
    auto dotp = [&](const IntegerVector& p) {
      Integer r = 0;
      for (std::size_t c = 0; c < d; ++c) r += nrm[c] * p[c];
      return r;
    };
    const Integer b = dotp(ip[chosen[0]]);
    bool le = true, ge = true;
    VertexSet on(n);
    for (std::size_t i = 0; i < n && (le || ge); ++i) {
      Integer v = dotp(ip[i]);
      if (v > b) le = false;
      if (v < b) ge = false;
      if (v == b) on.insert(i);
    }
    if (!le && !ge) return;
    Integer off = b;
    if (!le) {
      for (auto& x : nrm) x = -x;
      off = -b;
    }
    if (normals.insert(nrm).second) found.push_back({nrm, off, on});
  };
  // DFS over index subsets, pruning affinely dependent prefixes
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == d) {
      leaf();
      return;
    }
    for (std::size_t i = start; i + (d - chosen.size()) <= n; ++i) {
      if (!chosen.empty()) {
        IntegerVector w(d);
        for (std::size_t c = 0; c < d; ++c) w[c] = ip[i][c] - ip[chosen[0]][c];
        if (!ech.try_add(std::move(w))) continue;
      }
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
      if (!chosen.empty()) ech.pop();
    }
  };
  dfs(dfs, 0);
  if (found.size() < d + 1) throw Error("facet enumeration found too few facets");

  // drop points that are not vertices: a vertex lies on facets whose normals span R^d
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RationalVector> ns;
    for (const auto& f : found)
      if (f.verts.contains(i)) ns.emplace_back(f.normal.begin(), f.normal.end());
    if (!ns.empty() && exact_rank(ns) == d) keep.push_back(i);
  }
  std::vector<std::size_t> newidx(n, n);
  for (std::size_t k = 0; k < keep.size(); ++k) newidx[keep[k]] = k;

  for (auto i : keep) {
    P.vertices.push_back(pts[i]);
    P.points.push_back(chart_pts[i]);
  }
  std::vector<std::vector<std::size_t>> facet_sets;
  std::vector<Facet> facets;
  for (const auto& f : found) {
    std::vector<std::size_t> vs;
    for (auto i : f.verts.members())
      if (newidx[i] < n) vs.push_back(newidx[i]);
    Facet F;
    for (const auto& x : f.normal) F.normal.emplace_back(x);
    F.offset = Rational(f.offset, scale);
    F.vertices = VertexSet::of(keep.size(), vs);
    facet_sets.push_back(vs);
    facets.push_back(std::move(F));
  }
  P.lattice = FaceLattice::from_vertex_facets(keep.size(), facet_sets);
  // align facet records with the lattice's facet ids
  for (FaceId f : P.lattice.faces_of_dim(P.dim - 1)) {
    for (auto& F : facets)
      if (F.vertices == P.lattice.face(f).vertices) {
        P.facets.push_back(F);
        break;
      }
  }
  return P;
}

/// Pointed polyhedral cone cP over a polytope P placed at height one. Face F of
/// P corresponds to the cone over F; the empty face gives the zero cone.
struct PolyhedralCone {
  std::vector<IntegerVector> rays;            // ray i spanned by (p_i, 1), primitive
  std::vector<RationalVector> inward_normals;  // aligned with lattice facets
  FaceLattice lattice = FaceLattice::empty_polytope();
  std::size_t ambient_dim = 0;

  int dim() const { return lattice.dim() + 1; }
  // Generators of the cone over face F as rational vectors.
  std::vector<RationalVector> generators(FaceId f) const {
    std::vector<RationalVector> out;
    for (auto v : lattice.face(f).vertices.members()) out.emplace_back(rays[v].begin(), rays[v].end());
    return out;
  }
};

inline PolyhedralCone cone_over(const GeometricPolytope& P) {
  if (P.dim < 0) throw InputError("cone over the empty polytope");
  PolyhedralCone C;
  C.ambient_dim = static_cast<std::size_t>(P.dim) + 1;
  C.lattice = P.lattice;
  for (const auto& p : P.points) {
    RationalVector r = p;
    r.push_back(1);
    C.rays.push_back(primitive(r));
  }
  if (P.dim == 0) return C;
  // <a,x> <= b on P  <=>  b*s - <a,x> >= 0 on the cone
  for (const auto& F : P.facets) {
    RationalVector n;
    for (const auto& a : F.normal) n.push_back(-a);
    n.push_back(F.offset);
    auto pn = primitive(n);
    C.inward_normals.emplace_back(pn.begin(), pn.end());
  }
  return C;
}

/// A fan of pointed cones given by ray index sets. When `base` is set, cone i
/// is the cone over face `base_face[i]` of that lattice, which is what the
/// g-polynomial of a cone refers to.
class Fan {
 public:
  struct Cone {
    VertexSet rays;
    int dim = 0;
    std::optional<FaceId> base_face;
  };

  Fan(std::size_t ambient, std::vector<IntegerVector> rays, std::vector<Cone> cones,
      std::shared_ptr<const FaceLattice> base = nullptr)
      : ambient_(ambient), rays_(std::move(rays)), cones_(std::move(cones)), base_(std::move(base)) {
    validate();
    compute_boundary();
  }

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<IntegerVector>& rays() const { return rays_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const FaceLattice* base() const { return base_.get(); }
  int dim() const {
    int d = 0;
    for (const auto& c : cones_) d = std::max(d, c.dim);
    return d;
  }
  bool is_pure() const {
    const int d = dim();
    for (std::size_t i = 0; i < cones_.size(); ++i) {
      if (cones_[i].dim == d) continue;
      bool under = false;
      for (const auto& c : cones_)
        if (c.dim == d && cones_[i].rays.is_subset_of(c.rays)) under = true;
      if (!under) return false;
    }
    return true;
  }
  // Cones of the boundary subfan (generated by codim-one cones lying in exactly one maximal cone).
  const std::vector<bool>& in_boundary() const { return boundary_; }
  bool is_complete() const { return std::none_of(boundary_.begin(), boundary_.end(), [](bool b) { return b; }); }
  std::size_t count_of_dim(int k) const {
    return static_cast<std::size_t>(std::count_if(cones_.begin(), cones_.end(), [k](const Cone& c) { return c.dim == k; }));
  }

 private:
  void validate() {
    std::map<VertexSet, std::size_t> by_rays;
    for (std::size_t i = 0; i < cones_.size(); ++i) {
      if (cones_[i].rays.universe() != rays_.size()) throw InputError("fan cone with wrong ray universe");
      by_rays.emplace(cones_[i].rays, i);
    }
    for (std::size_t i = 0; i < cones_.size(); ++i)
      for (std::size_t j = i + 1; j < cones_.size(); ++j)
        if (!by_rays.count(cones_[i].rays & cones_[j].rays))
          throw InputError("fan axiom violated: intersection of two cones is not a cone of the fan");
    for (const auto& r : rays_)
      if (r.size() != ambient_) throw InputError("fan ray of wrong dimension");
  }

  void compute_boundary() {
    const int d = dim();
    boundary_.assign(cones_.size(), false);
    for (const auto& c : cones_) {
      if (c.dim != d - 1) continue;
      int containing = 0;
      for (const auto& m : cones_)
        if (m.dim == d && c.rays.is_subset_of(m.rays)) ++containing;
      if (containing != 1) continue;
      for (std::size_t k = 0; k < cones_.size(); ++k)
        if (cones_[k].rays.is_subset_of(c.rays)) boundary_[k] = true;
    }
  }

  std::size_t ambient_;
  std::vector<IntegerVector> rays_;
  std::vector<Cone> cones_;
  std::shared_ptr<const FaceLattice> base_;
  std::vector<bool> boundary_;
};

namespace detail {

// Exact pointedness witness: a functional strictly positive on every generator.
inline bool positive_on(const RationalVector& functional, const std::vector<IntegerVector>& rays, const VertexSet& which) {
  for (auto i : which.members()) {
    Rational s = 0;
    for (std::size_t c = 0; c < functional.size(); ++c) s += functional[c] * rays[i][c];
    if (s <= 0) return false;
  }
  return true;
}

}  // namespace detail

/// Complete fan of cones over the proper faces of P, with the origin moved to
/// the vertex average.
inline Fan central_fan(const GeometricPolytope& P) {
  if (P.dim < 1) throw InputError("central fan needs a polytope of dimension >= 1");
  const auto c = P.barycenter();
  std::vector<IntegerVector> rays;
  for (const auto& p : P.points) {
    RationalVector r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] - c[i];
    rays.push_back(primitive(r));
  }
  const auto& L = P.lattice;
  auto facet_ids = L.faces_of_dim(L.dim() - 1);
  std::vector<Fan::Cone> cones;
  for (FaceId f = 0; f < L.top(); ++f) {
    cones.push_back({L.face(f).vertices, L.face(f).dim + 1, f});
    if (f == L.bottom()) continue;
    bool pointed = false;
    for (std::size_t k = 0; k < facet_ids.size() && !pointed; ++k) {
      if (!L.leq(f, facet_ids[k])) continue;
      pointed = detail::positive_on(P.facets[k].normal, rays, L.face(f).vertices);
    }
    if (!pointed) throw Error("central fan: cone over face " + L.describe(f) + " is not pointed");
  }
  return Fan(static_cast<std::size_t>(P.dim), std::move(rays), std::move(cones),
             std::make_shared<const FaceLattice>(L));
}

/// The fan [cP] of all faces of the single cone over P.
inline Fan cone_fan(const PolyhedralCone& C) {
  const auto& L = C.lattice;
  std::vector<Fan::Cone> cones;
  RationalVector height(C.ambient_dim);
  height.back() = 1;
  for (FaceId f = 0; f < L.size(); ++f) {
    if (!detail::positive_on(height, C.rays, L.face(f).vertices)) throw Error("cone is not pointed");
    cones.push_back({L.face(f).vertices, L.face(f).dim + 1, f});
  }
  return Fan(C.ambient_dim, C.rays, std::move(cones), std::make_shared<const FaceLattice>(L));
}

}  // namespace toricg
