#pragma once

#include "toricg/face_lattice.hpp"
#include "toricg/toric.hpp"

#include <string>
#include <vector>

namespace toricg {

/// m_k(tau) for every face tau of the cone over a polytope. Faces are the
/// lattice faces of the polytope; the bottom face is the zero cone o, and the
/// cone over a face F has dimension dim F + 1.
class MultiplicityTable {
 public:
  MultiplicityTable() = default;
  explicit MultiplicityTable(std::vector<std::vector<Integer>> m) : m_(std::move(m)) {}

  // Zero outside the stored range.
  Integer operator()(FaceId tau, long k) const {
    if (tau >= m_.size() || k < 0 || k >= static_cast<long>(m_[tau].size())) return 0;
    return m_[tau][static_cast<std::size_t>(k)];
  }
  const std::vector<Integer>& row(FaceId tau) const { return m_.at(tau); }
  std::size_t size() const { return m_.size(); }

 private:
  std::vector<std::vector<Integer>> m_;
};

/// Solves the degree-k Euler characteristic of the reduced stalk sequence at
/// each face, in increasing dimension:
///   sum_{rho <= tau} (-1)^{dim rho} sum_j m_j(rho) g_{k-j}(tau/rho) = 0,
/// where the rho = tau, j = k term isolates m_k(tau). Throws if a multiplicity
/// comes out negative or nonzero outside 0 <= 2k <= dim tau.
inline MultiplicityTable verma_multiplicities(const FaceLattice& L, ToricTable& T) {
  std::vector<std::vector<Integer>> m(L.size());
  m[L.bottom()] = {1};
  for (FaceId tau = 1; tau < L.size(); ++tau) {
    const int cone_dim = L.face(tau).dim + 1;
    std::vector<Integer> row;
    for (long k = 0; k <= cone_dim; ++k) {
      Integer s = 0;
      for (FaceId rho : L.strictly_below(tau)) {
        const int rho_dim = L.face(rho).dim + 1;
        const Polynomial& g = T.g(rho, tau);
        Integer inner = 0;
        for (long j = 0; j <= k && j < static_cast<long>(m[rho].size()); ++j) inner += m[rho][j] * g[k - j];
        s += (rho_dim % 2 == 0) ? inner : Integer(-inner);
      }
      Integer mk = (cone_dim % 2 == 0) ? Integer(-s) : s;
      if (mk < 0)
        throw Error("verma_multiplicities: negative multiplicity at face " + L.describe(tau) + ", k = " + std::to_string(k));
      if (2 * k > cone_dim) {
        if (mk != 0)
          throw Error("verma_multiplicities: inconsistent system at face " + L.describe(tau) + ", k = " + std::to_string(k));
        continue;
      }
      row.push_back(mk);
    }
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    m[tau] = std::move(row);
  }
  return MultiplicityTable(std::move(m));
}

inline MultiplicityTable verma_multiplicities(const FaceLattice& L) {
  require_eulerian(L);
  ToricTable T(L);
  return verma_multiplicities(L, T);
}

/// A lattice together with its dual and the order-reversing face bijection.
struct PolarPair {
  const FaceLattice& primal;
  FaceLattice polar;
  std::vector<FaceId> to_polar;

  explicit PolarPair(const FaceLattice& L) : primal(L), polar(dual(L)), to_polar(L.size()) {
    if (L.dim() <= 0) {
      for (FaceId f = 0; f < L.size(); ++f) to_polar[f] = L.size() - 1 - f;
      return;
    }
    const auto facets = L.faces_of_dim(L.dim() - 1);
    for (FaceId f = 0; f < L.size(); ++f) {
      VertexSet s(facets.size());
      for (std::size_t i = 0; i < facets.size(); ++i)
        if (L.leq(f, facets[i])) s.insert(i);
      auto g = polar.find(s);
      if (!g) throw Error("dual lattice is missing a face");
      to_polar[f] = *g;
    }
  }
};

/// Evaluates g(F*) (polar of a face) and g(P/F) for every face of a lattice.
class PolarTables {
 public:
  explicit PolarTables(const FaceLattice& L) : pair_(L), primal_(L), polar_(pair_.polar) {}

  const FaceLattice& lattice() const { return pair_.primal; }
  // g of the polar of the face F: the dual of [empty, F] is [F', top'] in the dual lattice.
  const Polynomial& g_polar_face(FaceId f) { return polar_.g(pair_.to_polar[f], pair_.polar.top()); }
  const Polynomial& g_quotient(FaceId f) { return primal_.g_quotient(f); }
  ToricTable& primal() { return primal_; }

 private:
  PolarPair pair_;
  ToricTable primal_;
  ToricTable polar_;
};

struct VermaPolarCheck {
  bool ok = true;
  std::vector<std::string> mismatches;
};

/// m_k(cF) = g_k(F*) for every nonempty face F and every k.
inline VermaPolarCheck check_verma_vs_polar(const FaceLattice& L) {
  require_eulerian(L);
  PolarTables P(L);
  auto m = verma_multiplicities(L, P.primal());
  VermaPolarCheck r;
  for (FaceId f = 1; f < L.size(); ++f) {
    const auto& g = P.g_polar_face(f);
    const long top = std::max<long>(g.degree(), static_cast<long>(m.row(f).size()) - 1);
    for (long k = 0; k <= top; ++k)
      if (m(f, k) != g[k]) {
        r.ok = false;
        r.mismatches.push_back("face " + L.describe(f) + " k=" + std::to_string(k) + ": m=" + m(f, k).str() +
                               " g(F*)=" + g[k].str());
      }
  }
  return r;
}

/// sum over faces F (empty through P) of (-1)^{dim F} g(F*, t) g(P/F, t); zero
/// for every nonempty polytope.
inline Polynomial check_reciprocity(const FaceLattice& L) {
  if (L.dim() < 0) throw InputError("reciprocity needs a nonempty polytope");
  require_eulerian(L);
  PolarTables P(L);
  Polynomial sum;
  for (FaceId f = 0; f < L.size(); ++f) {
    Polynomial term = P.g_polar_face(f) * P.g_quotient(f);
    if (L.face(f).dim % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

struct TruncatedValue {
  Integer value;
  bool ok() const { return value >= 0; }
};

/// sum of (-1)^{dim F - s + 1} g_i(F*) g_j(P/F) over i + j = k and faces F with
/// dim F <= s + 2i - 1.
inline TruncatedValue truncated_inequality(PolarTables& P, long k, long s) {
  if (k < 0 || s < 0) throw InputError("truncated_inequality needs k, s >= 0");
  const auto& L = P.lattice();
  TruncatedValue r;
  for (long i = 0; i <= k; ++i) {
    const long j = k - i;
    for (FaceId f = 0; f < L.size(); ++f) {
      const long df = L.face(f).dim;
      if (df > s + 2 * i - 1) continue;
      Integer term = P.g_polar_face(f)[i] * P.g_quotient(f)[j];
      if (term == 0) continue;
      const long e = df - s + 1;
      r.value += ((e % 2 + 2) % 2 == 0) ? term : Integer(-term);
    }
  }
  return r;
}

inline TruncatedValue truncated_inequality(const FaceLattice& L, long k, long s) {
  require_eulerian(L);
  PolarTables P(L);
  return truncated_inequality(P, k, s);
}

}  // namespace toricg
