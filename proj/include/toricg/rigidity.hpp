#pragma once

#include "toricg/geometry.hpp"
#include "toricg/linalg.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace toricg {

struct DegreeOne {
  std::size_t dim = 0;       // #rays - rank of the restriction map
  std::size_t rank = 0;
  bool rays_span = false;    // precondition of the dim formula
};

/// Degree-one part of the quotient module: the cokernel dimension of the
/// restriction V* -> sum over rays of <rho>, computed by exact rank.
inline DegreeOne degree_one_dim(const Fan& fan) {
  std::vector<RationalVector> rows;
  for (const auto& r : fan.rays()) rows.emplace_back(r.begin(), r.end());
  DegreeOne out;
  out.rank = exact_rank(rows);
  out.dim = fan.rays().size() - out.rank;
  out.rays_span = out.rank == fan.ambient_dim();
  return out;
}

/// Bar framework on the vertices of a polytope.
struct Framework {
  std::vector<RationalVector> points;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  int dim = 0;
};

/// Edges of P plus a fan triangulation of each 2-face from its first vertex
/// in `priority` order (identity when empty).
inline Framework build_framework(const GeometricPolytope& P, std::vector<std::size_t> priority = {}) {
  if (P.dim < 3) throw InputError("framework needs a polytope of dimension >= 3");
  const auto& L = P.lattice;
  const std::size_t n = P.n_vertices();
  if (priority.empty()) {
    priority.resize(n);
    std::iota(priority.begin(), priority.end(), 0);
  }
  std::vector<std::size_t> rank_of(n);
  for (std::size_t i = 0; i < n; ++i) rank_of[priority.at(i)] = i;

  Framework fw;
  fw.points = P.points;
  fw.dim = P.dim;
  for (FaceId e : L.faces_of_dim(1)) {
    auto vs = L.face(e).vertices.members();
    fw.edges.emplace_back(vs[0], vs[1]);
  }
  for (FaceId f : L.faces_of_dim(2)) {
    auto vs = L.face(f).vertices.members();
    std::size_t apex = vs[0];
    for (auto v : vs)
      if (rank_of[v] < rank_of[apex]) apex = v;
    VertexSet neighbours(n);
    for (FaceId e : L.face(f).lower) {
      const auto& ev = L.face(e).vertices;
      if (ev.contains(apex))
        for (auto w : ev.members()) neighbours.insert(w);
    }
    for (auto w : vs)
      if (w != apex && !neighbours.contains(w)) fw.edges.emplace_back(std::min(apex, w), std::max(apex, w));
  }
  return fw;
}

/// E x (d n) matrix; the row of edge (v, w) holds p_v - p_w in v's block and
/// p_w - p_v in w's block.
inline RationalMatrix rigidity_matrix(const Framework& fw) {
  const std::size_t d = static_cast<std::size_t>(fw.dim);
  RationalMatrix M(fw.edges.size(), d * fw.points.size());
  for (std::size_t r = 0; r < fw.edges.size(); ++r) {
    auto [v, w] = fw.edges[r];
    for (std::size_t c = 0; c < d; ++c) {
      Rational diff = fw.points[v][c] - fw.points[w][c];
      M(r, v * d + c) = diff;
      M(r, w * d + c) = -diff;
    }
  }
  return M;
}

struct RigidityReport {
  std::size_t edges = 0;
  std::size_t rank = 0;
  std::size_t kernel = 0;          // infinitesimal motions
  std::size_t stress = 0;          // self-stresses = E - rank
  std::size_t trivial_motions = 0; // C(d+1, 2)
  Integer euler = 0;               // C(d+1,2) - d f_0 + E
  bool rigid() const { return kernel == trivial_motions; }
};

inline RigidityReport analyze_framework(const Framework& fw) {
  RigidityReport r;
  const auto M = rigidity_matrix(fw);
  r.edges = fw.edges.size();
  r.rank = exact_rank(M);
  r.kernel = M.cols() - r.rank;
  r.stress = r.edges - r.rank;
  r.trivial_motions = static_cast<std::size_t>(fw.dim) * (fw.dim + 1) / 2;
  r.euler = Integer(r.trivial_motions) - Integer(fw.dim) * fw.points.size() + r.edges;
  return r;
}

inline std::size_t stress_dimension(const Framework& fw) { return analyze_framework(fw).stress; }

/// Dimension of the stress space of the triangulated edge framework of P.
inline std::size_t g2_via_stresses(const GeometricPolytope& P) { return stress_dimension(build_framework(P)); }

/// Kernel of the rigidity matrix equals the space of trivial (affine
/// isometry) motions, of dimension C(d+1, 2).
inline bool infinitesimal_rigidity_check(const Framework& fw) { return analyze_framework(fw).rigid(); }

}  // namespace toricg
