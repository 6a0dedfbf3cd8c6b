#pragma once

#include "toricg/face_lattice.hpp"
#include "toricg/geometry.hpp"
#include "toricg/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toricg {

namespace detail {

inline const Polynomial& t_minus_one_power(long n) {
  static thread_local std::vector<Polynomial> cache;
  while (static_cast<long>(cache.size()) <= n) cache.push_back(binomial_power(-1, static_cast<long>(cache.size())));
  return cache[static_cast<std::size_t>(n)];
}

// g from h: g_k = h_k - h_{k-1} for 0 <= k <= floor(r/2).
inline Polynomial g_from_h(const Polynomial& h, int r) {
  if (r < 0) return Polynomial{1};
  std::vector<Integer> g(static_cast<std::size_t>(r / 2) + 1);
  for (long k = 0; k <= r / 2; ++k) g[static_cast<std::size_t>(k)] = h[k] - h[k - 1];
  return Polynomial(std::move(g));
}

}  // namespace detail

/// Toric g- and h-polynomials of every interval of one lattice.
///
/// For a fixed lower face `lo`, the intervals [lo, H] are processed in
/// increasing dimension of H using
///   h([lo,H]) = sum_{lo <= K < H} g([lo,K]) (t-1)^{dim H - dim K - 1},
/// with g = h = 1 on the one-element interval. Rows are filled on demand and
/// kept for the lifetime of the table; the lattice must outlive the table.
class ToricTable {
 public:
  explicit ToricTable(const FaceLattice& L) : L_(L), rows_(L.size()) {}

  const FaceLattice& lattice() const { return L_; }

  const Polynomial& g(FaceId lo, FaceId hi) { return row(lo).g[hi]; }
  const Polynomial& h(FaceId lo, FaceId hi) { return row(lo).h[hi]; }

  // Face F as a polytope, and the quotient P/F.
  const Polynomial& g_face(FaceId f) { return g(L_.bottom(), f); }
  const Polynomial& g_quotient(FaceId f) { return g(f, L_.top()); }
  const Polynomial& g_polytope() { return g(L_.bottom(), L_.top()); }
  const Polynomial& h_polytope() { return h(L_.bottom(), L_.top()); }

 private:
  struct Row {
    std::vector<Polynomial> g, h;
  };

  const Row& row(FaceId lo) {
    auto& slot = rows_[lo];
    if (slot) return *slot;
    Row r;
    r.g.resize(L_.size());
    r.h.resize(L_.size());
    r.g[lo] = r.h[lo] = Polynomial{1};
    const int dlo = L_.face(lo).dim;
    for (FaceId hi : L_.strictly_above(lo)) {
      Polynomial h;
      const int dhi = L_.face(hi).dim;
      h.add_scaled(detail::t_minus_one_power(dhi - dlo - 1), 1);
      for (FaceId k : L_.strictly_below(hi)) {
        if (k <= lo || !L_.leq(lo, k)) continue;
        h += r.g[k] * detail::t_minus_one_power(dhi - L_.face(k).dim - 1);
      }
      r.g[hi] = detail::g_from_h(h, dhi - dlo - 1);
      r.h[hi] = std::move(h);
    }
    slot = std::move(r);
    return *slot;
  }

  const FaceLattice& L_;
  std::vector<std::optional<Row>> rows_;
};

inline void require_eulerian(const FaceLattice& L) {
  if (auto w = L.eulerian_witness())
    throw NotEulerianError("lattice is not Eulerian: interval [" + L.describe(w->first) + ", " + L.describe(w->second) + "]",
                           L.face(w->first).vertices.members(), L.face(w->second).vertices.members());
}

inline Polynomial toric_h(const FaceLattice& L) {
  require_eulerian(L);
  ToricTable T(L);
  return T.h_polytope();
}

/// g truncated at degree floor(d/2).
inline Polynomial toric_g(const FaceLattice& L) {
  require_eulerian(L);
  ToricTable T(L);
  return T.g_polytope();
}

/// The f-to-h transform for simplicial polytopes: f = (f_0, ..., f_{d-1}).
inline Polynomial simplicial_h(const std::vector<std::size_t>& f, int d) {
  if (static_cast<int>(f.size()) != d) throw InputError("simplicial_h: face-number sequence must have length d");
  Polynomial h = detail::t_minus_one_power(d);
  for (int k = 0; k < d; ++k) h.add_scaled(detail::t_minus_one_power(d - 1 - k), Integer(f[static_cast<std::size_t>(k)]));
  return h;
}

/// Hilbert series of a quasi-convex fan from the g-polynomials of its cones:
/// sum over cones not in the boundary of g(sigma) (t-1)^{d - dim sigma}.
inline Polynomial fan_h(const Fan& fan) {
  if (!fan.base()) throw InputError("fan_h: fan cones are not tied to polytope faces");
  if (!fan.is_pure() || fan.dim() != static_cast<int>(fan.ambient_dim()))
    throw InputError("fan_h: fan must be purely full-dimensional");
  const FaceLattice& L = *fan.base();
  ToricTable T(L);
  const int d = fan.dim();
  Polynomial h;
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    if (fan.in_boundary()[i]) continue;
    const auto& c = fan.cones()[i];
    h += T.g_face(*c.base_face) * detail::t_minus_one_power(d - c.dim);
  }
  return h;
}

/// Flag numbers f_S for S a subset of {0, ..., d-1}, indexed by bitmask.
class FlagVector {
 public:
  FlagVector() = default;
  FlagVector(int d, std::vector<Integer> counts) : d_(d), counts_(std::move(counts)) {}

  int dim() const { return d_; }
  const Integer& operator[](std::uint32_t mask) const { return counts_.at(mask); }
  Integer at(std::initializer_list<int> dims) const {
    std::uint32_t m = 0;
    for (int k : dims) {
      if (k < 0 || k >= d_) return 0;
      m |= 1u << k;
    }
    return counts_.at(m);
  }
  std::size_t size() const { return counts_.size(); }

  // "{0,2}" style label for mask.
  static std::string label(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int k = 0; k < 32; ++k)
      if (mask >> k & 1u) {
        if (!first) s += ",";
        s += std::to_string(k);
        first = false;
      }
    return s + "}";
  }

 private:
  int d_ = 0;
  std::vector<Integer> counts_;
};

/// Chain counts by dynamic programming over the Hasse diagram closure.
inline FlagVector flag_vector(const FaceLattice& L) {
  const int d = std::max(L.dim(), 0);
  if (d > 20) throw InputError("flag_vector: dimension too large");
  std::vector<Integer> counts(std::size_t{1} << d);
  std::vector<Integer> ending(L.size());
  for (std::uint32_t mask = 0; mask < counts.size(); ++mask) {
    if (mask == 0) {
      counts[0] = 1;
      continue;
    }
    std::vector<int> dims;
    for (int k = 0; k < d; ++k)
      if (mask >> k & 1u) dims.push_back(k);
    std::fill(ending.begin(), ending.end(), Integer(0));
    for (FaceId f = 0; f < L.size(); ++f)
      if (L.face(f).dim == dims[0]) ending[f] = 1;
    for (std::size_t s = 1; s < dims.size(); ++s) {
      std::vector<Integer> next(L.size());
      for (FaceId g = 0; g < L.size(); ++g) {
        if (L.face(g).dim != dims[s]) continue;
        for (FaceId f : L.strictly_below(g))
          if (L.face(f).dim == dims[s - 1]) next[g] += ending[f];
      }
      ending = std::move(next);
    }
    Integer total = 0;
    for (FaceId f = 0; f < L.size(); ++f)
      if (L.face(f).dim == dims.back()) total += ending[f];
    counts[mask] = total;
  }
  return FlagVector(d, std::move(counts));
}

inline Integer g1_closed(const FaceLattice& L) {
  if (L.dim() < 1) throw InputError("g1_closed needs d >= 1");
  return Integer(L.faces_of_dim(0).size()) - (L.dim() + 1);
}

/// f_1 + f_02 - 3 f_2 - d f_0 + C(d+1, 2); meaningful as an expression for d >= 3.
inline Integer g2_flag_expression(const FaceLattice& L) {
  const int d = L.dim();
  if (d < 3) throw InputError("g2 flag expression needs d >= 3");
  auto fl = flag_vector(L);
  return fl.at({1}) + fl.at({0, 2}) - 3 * fl.at({2}) - d * fl.at({0}) + binomial(d + 1, 2);
}

/// g_2 in closed form; a g-number only when 2 <= d/2.
inline Integer g2_closed(const FaceLattice& L) {
  if (L.dim() < 4) throw InputError("g2_closed needs d >= 4");
  return g2_flag_expression(L);
}

inline bool check_dehn_sommerville(const Polynomial& h, int d) {
  if (d < 0) return h == Polynomial{1};  // the empty polytope
  for (int i = 0; i <= d; ++i)
    if (h[i] != h[d - i]) return false;
  return h.degree() <= d;
}
inline bool check_dehn_sommerville(const FaceLattice& L) { return check_dehn_sommerville(toric_h(L), L.dim()); }

/// g(P) >= g(F) g(P/F) coefficientwise.
inline bool check_monotonicity(ToricTable& T, FaceId f) {
  return coefficientwise_geq(T.g_polytope(), T.g_face(f) * T.g_quotient(f));
}
inline bool check_monotonicity(const FaceLattice& L, FaceId f) {
  require_eulerian(L);
  ToricTable T(L);
  return check_monotonicity(T, f);
}

/// g_i <= C(f_0 - d + i - 2, i) for 1 <= i <= floor(d/2).
inline bool check_ubt(const FaceLattice& L) {
  const auto g = toric_g(L);
  const long f0 = static_cast<long>(L.faces_of_dim(0).size());
  const int d = L.dim();
  for (int i = 1; i <= d / 2; ++i)
    if (g[i] > binomial(f0 - d + i - 2, i)) return false;
  return true;
}

/// No zero g_k followed by a nonzero g_{k+1}.
inline bool check_g_cascade(const Polynomial& g) {
  bool seen_zero = false;
  for (long k = 0; k < static_cast<long>(g.size()); ++k) {
    if (g[k] == 0) seen_zero = true;
    else if (seen_zero) return false;
  }
  return true;
}
inline bool check_g_cascade(const FaceLattice& L) { return check_g_cascade(toric_g(L)); }

/// 1, g_1, g_2 is an M-sequence iff g_2 <= C(g_1 + 1, 2).
inline bool check_m_sequence_degree_two(const Polynomial& g) {
  if (g[1] < 0) return false;
  const Integer g1 = g[1];
  return g[2] <= (g1 + 1) * g1 / 2;
}

/// h_k - h_{k-1} for every k, with out-of-range h read as zero.
inline Integer gtilde(const Polynomial& h, long k) { return h[k] - h[k - 1]; }
inline Integer gtilde(const FaceLattice& L, long k) { return gtilde(toric_h(L), k); }

/// A flag-number functional defined on polytopes of one fixed dimension.
struct Invariant {
  int dim;
  std::function<Integer(const FaceLattice&)> eval;
};

inline Invariant gtilde_invariant(long k, int dim) {
  return {dim, [k](const FaceLattice& L) { return gtilde(L, k); }};
}

/// (phi * psi)(P) = sum over faces F of dim phi.dim of phi(F) psi(P/F).
inline Integer convolution(const Invariant& phi, const Invariant& psi, const FaceLattice& L) {
  if (L.dim() != phi.dim + psi.dim + 1)
    throw InputError("convolution: lattice dimension " + std::to_string(L.dim()) + " != " + std::to_string(phi.dim) +
                     " + " + std::to_string(psi.dim) + " + 1");
  Integer total = 0;
  for (FaceId f : L.faces_of_dim(phi.dim)) {
    auto lower = face_lattice_of(L, f);
    auto upper = quotient(L, f);
    if (lower.dim() != phi.dim || upper.dim() != psi.dim) throw Error("convolution: interval dimension mismatch");
    Integer a = phi.eval(lower);
    if (a == 0) continue;
    total += a * psi.eval(upper);
  }
  return total;
}

struct IdentityCheck {
  Integer lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

/// (k+1) g~_{k+1}(P) + (d-k+1) g~_k(P) = sum_{i=0}^{k} (i+1) (g~_i^{2i} * g~_{k-i}^{d-2i-1})(P).
inline IdentityCheck check_kalai_identity(const FaceLattice& L, long k) {
  const int d = L.dim();
  const auto h = toric_h(L);
  IdentityCheck r;
  r.lhs = (k + 1) * gtilde(h, k + 1) + (d - k + 1) * gtilde(h, k);
  for (long i = 0; i <= k; ++i) {
    const int d1 = static_cast<int>(2 * i);
    const int d2 = d - d1 - 1;
    if (d1 > d) break;
    r.rhs += (i + 1) * convolution(gtilde_invariant(i, d1), gtilde_invariant(k - i, d2), L);
  }
  return r;
}

/// Simplicial form: sum over vertices v of g_k(P/v) = (d-k+1) g_k(P) + (k+1) g_{k+1}(P).
inline IdentityCheck check_simplicial_kalai(const FaceLattice& L, long k) {
  require_eulerian(L);
  ToricTable T(L);
  const int d = L.dim();
  IdentityCheck r;
  for (FaceId v : L.faces_of_dim(0)) r.lhs += T.g_quotient(v)[k];
  const auto& g = T.g_polytope();
  r.rhs = (d - k + 1) * g[k] + (k + 1) * g[k + 1];
  return r;
}

/// g(CQ) = g(Q) and h(BQ) = (1 + t) h(Q).
inline bool check_cone_bipyramid(const FaceLattice& Q) {
  if (toric_g(pyramid(Q)) != toric_g(Q)) return false;
  if (Q.dim() < 0) return true;
  return toric_h(bipyramid(Q)) == Polynomial{1, 1} * toric_h(Q);
}

}  // namespace toricg
