#pragma once

#include "toricg/numeric.hpp"
#include "toricg/vertex_set.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace toricg {

using FaceId = std::size_t;

struct Face {
  int dim = -1;
  VertexSet vertices;
  std::vector<FaceId> lower;  // faces covered by this one
  std::vector<FaceId> upper;  // faces covering this one
};

class NotEulerianError : public InputError {
 public:
  NotEulerianError(const std::string& what, std::vector<std::size_t> lo, std::vector<std::size_t> hi)
      : InputError(what), lower_(std::move(lo)), upper_(std::move(hi)) {}
  // Vertex sets bounding an interval with unequal even/odd counts.
  const std::vector<std::size_t>& lower() const { return lower_; }
  const std::vector<std::size_t>& upper() const { return upper_; }

 private:
  std::vector<std::size_t> lower_, upper_;
};

class NotGradedError : public InputError {
 public:
  using InputError::InputError;
};

/// Face poset of a convex polytope: a graded, atomic, Eulerian lattice with
/// bottom the empty face (dim -1) and top the polytope itself (dim d).
///
/// Faces are stored sorted by (dim, vertex set), so the bottom has id 0 and the
/// top has the last id. Each face is identified by the set of atoms below it.
/// The one-element lattice models the empty polytope (d = -1).
class FaceLattice {
 public:
  /// The empty polytope: a single face that is both bottom and top.
  static FaceLattice empty_polytope() {
    FaceLattice L;
    L.n_atoms_ = 0;
    L.dim_ = -1;
    Face f;
    f.dim = -1;
    f.vertices = VertexSet(0);
    L.faces_.push_back(std::move(f));
    L.finish();
    return L;
  }

  /// Closes the facet vertex-sets under intersection and builds the lattice.
  /// Throws InputError for bad input, NotGradedError / NotEulerianError when the
  /// result cannot be the boundary of a polytope.
  static FaceLattice from_vertex_facets(std::size_t n_vertices,
                                        const std::vector<std::vector<std::size_t>>& facets) {
    if (n_vertices < 1) throw InputError("lattice needs at least one vertex");
    if (facets.empty()) throw InputError("lattice needs at least one facet");
    std::vector<VertexSet> fs;
    for (const auto& f : facets) {
      for (auto v : f)
        if (v >= n_vertices) throw InputError("facet vertex index " + std::to_string(v) + " out of range");
      fs.push_back(VertexSet::of(n_vertices, f));
    }
    const VertexSet all = VertexSet::full(n_vertices);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i] == all) throw InputError("a facet contains every vertex");
      for (std::size_t j = 0; j < fs.size(); ++j)
        if (i != j && fs[i].is_subset_of(fs[j]))
          throw InputError("facet " + std::to_string(i) + " is contained in facet " + std::to_string(j));
    }

    std::unordered_set<VertexSet, VertexSetHash> seen(fs.begin(), fs.end());
    std::vector<VertexSet> family(fs.begin(), fs.end());
    for (std::size_t head = 0; head < family.size(); ++head) {
      for (const auto& f : fs) {
        VertexSet x = family[head] & f;
        if (seen.insert(x).second) family.push_back(std::move(x));
      }
    }
    family.push_back(all);
    family.push_back(VertexSet(n_vertices));

    FaceLattice L = from_face_family(n_vertices, std::move(family));
    for (FaceId a : L.faces_of_dim(0))
      if (L.faces_[a].vertices.count() != 1)
        throw NotEulerianError("minimal nonempty face is not a single vertex", {}, L.faces_[a].vertices.members());
    if (L.faces_of_dim(0).size() != n_vertices)
      throw InputError("some vertex is not a face of the polytope (not in any facet or not extreme)");
    if (auto w = L.eulerian_witness()) {
      throw NotEulerianError("poset is not Eulerian: interval [" + L.describe(w->first) + ", " +
                                 L.describe(w->second) + "] has unequal even/odd counts",
                             L.faces_[w->first].vertices.members(), L.faces_[w->second].vertices.members());
    }
    return L;
  }

  /// Builds a lattice from the complete family of faces given as atom sets.
  /// The family must contain a unique minimum (contained in all) and maximum.
  /// Gradedness is enforced; the Eulerian property is not checked here.
  static FaceLattice from_face_family(std::size_t n_atoms, std::vector<VertexSet> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty()) throw InputError("empty face family");
    for (const auto& s : family)
      if (s.universe() != n_atoms) throw InputError("face family with mismatched universe");
    for (const auto& s : family) {
      if (!family.front().is_subset_of(s)) throw NotGradedError("face family has no unique bottom");
      if (!s.is_subset_of(family.back())) throw NotGradedError("face family has no unique top");
    }
    const std::size_t n = family.size();

    // upper covers = minimal strict supersets; family is sorted by cardinality
    std::vector<std::vector<std::size_t>> upper(n), lower(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> cands;
      for (std::size_t j = i + 1; j < n; ++j)
        if (family[i].is_subset_of(family[j])) cands.push_back(j);
      for (std::size_t a = 0; a < cands.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < a && minimal; ++b)
          if (family[cands[b]].count() < family[cands[a]].count() &&
              family[cands[b]].is_subset_of(family[cands[a]]))
            minimal = false;
        if (minimal) {
          upper[i].push_back(cands[a]);
          lower[cands[a]].push_back(i);
        }
      }
    }
    std::vector<int> dim(n, -2);
    dim[0] = -1;
    for (std::size_t i = 1; i < n; ++i) {
      int d = -2;
      for (auto l : lower[i]) {
        if (d == -2) d = dim[l] + 1;
        else if (dim[l] + 1 != d) throw NotGradedError("poset is not graded");
      }
      dim[i] = d;
    }
    // every maximal chain has the same length iff all upper covers agree too
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (auto u : upper[i])
        if (dim[u] != dim[i] + 1) throw NotGradedError("poset is not graded");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      if (dim[a] != dim[b]) return dim[a] < dim[b];
      return family[a] < family[b];
    });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    FaceLattice L;
    L.n_atoms_ = n_atoms;
    L.dim_ = dim[order.back()];
    L.faces_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Face& f = L.faces_[pos[i]];
      f.dim = dim[i];
      f.vertices = family[i];
      for (auto u : upper[i]) f.upper.push_back(pos[u]);
      for (auto l : lower[i]) f.lower.push_back(pos[l]);
      std::sort(f.upper.begin(), f.upper.end());
      std::sort(f.lower.begin(), f.lower.end());
    }
    L.finish();
    return L;
  }

  int dim() const { return dim_; }
  std::size_t size() const { return faces_.size(); }
  std::size_t n_vertices() const { return n_atoms_; }
  FaceId bottom() const { return 0; }
  FaceId top() const { return faces_.size() - 1; }
  const Face& face(FaceId f) const { return faces_[f]; }
  const std::vector<Face>& faces() const { return faces_; }

  std::vector<FaceId> faces_of_dim(int k) const {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < faces_.size(); ++f)
      if (faces_[f].dim == k) out.push_back(f);
    return out;
  }
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(std::max(dim_, 0)), 0);
    for (const auto& x : faces_)
      if (x.dim >= 0 && x.dim < dim_) ++f[static_cast<std::size_t>(x.dim)];
    return f;
  }

  bool leq(FaceId a, FaceId b) const { return faces_[a].vertices.is_subset_of(faces_[b].vertices); }

  std::optional<FaceId> find(const VertexSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Faces G with G < F (strictly), sorted by id; and faces G > F.
  const std::vector<FaceId>& strictly_below(FaceId f) const { return below_[f]; }
  const std::vector<FaceId>& strictly_above(FaceId f) const { return above_[f]; }

  FaceId meet(FaceId a, FaceId b) const {
    auto r = find(faces_[a].vertices & faces_[b].vertices);
    if (!r) throw Error("meet is not a face");
    return *r;
  }

  /// A pair F < G whose interval is not Eulerian, if any.
  std::optional<std::pair<FaceId, FaceId>> eulerian_witness() const {
    for (FaceId f = 0; f < faces_.size(); ++f) {
      const auto& up = above_[f];
      for (FaceId g : up) {
        long balance = (faces_[f].dim % 2 == 0) ? 1 : -1;
        for (FaceId h : up) {
          if (h > g) break;
          if (leq(h, g)) balance += (faces_[h].dim % 2 == 0) ? 1 : -1;
        }
        if (balance != 0) return std::make_pair(f, g);
      }
    }
    return std::nullopt;
  }
  bool is_eulerian() const { return !eulerian_witness().has_value(); }

  std::string describe(FaceId f) const {
    std::string s = "{";
    bool first = true;
    for (auto v : faces_[f].vertices.members()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  /// Facet vertex sets, ascending; the lattice/v1 description of this lattice.
  std::vector<std::vector<std::size_t>> facet_vertex_sets() const {
    std::vector<std::vector<std::size_t>> out;
    for (FaceId f : faces_of_dim(dim_ - 1)) out.push_back(faces_[f].vertices.members());
    return out;
  }

 private:
  void finish() {
    index_.clear();
    below_.assign(faces_.size(), {});
    above_.assign(faces_.size(), {});
    for (FaceId f = 0; f < faces_.size(); ++f) index_.emplace(faces_[f].vertices, f);
    for (FaceId g = 0; g < faces_.size(); ++g)
      for (FaceId f = 0; f < g; ++f)
        if (faces_[f].dim < faces_[g].dim && leq(f, g)) {
          below_[g].push_back(f);
          above_[f].push_back(g);
        }
  }

  std::size_t n_atoms_ = 0;
  int dim_ = -1;
  std::vector<Face> faces_;
  std::unordered_map<VertexSet, FaceId, VertexSetHash> index_;
  std::vector<std::vector<FaceId>> below_, above_;
};

inline FaceLattice lattice_from_vertex_facets(std::size_t n_vertices,
                                              const std::vector<std::vector<std::size_t>>& facets) {
  return FaceLattice::from_vertex_facets(n_vertices, facets);
}

/// The interval [lo, hi] re-graded so that lo becomes the empty face. Its
/// atoms are the faces covering lo, in id order.
inline FaceLattice interval(const FaceLattice& L, FaceId lo, FaceId hi) {
  if (!L.leq(lo, hi)) throw InputError("interval: lower face is not below upper face");
  if (lo == hi) return FaceLattice::empty_polytope();
  std::vector<FaceId> members;
  members.push_back(lo);
  for (FaceId g : L.strictly_above(lo))
    if (L.leq(g, hi)) members.push_back(g);
  std::vector<FaceId> atoms;
  for (FaceId g : members)
    if (L.face(g).dim == L.face(lo).dim + 1) atoms.push_back(g);
  std::vector<VertexSet> family;
  family.reserve(members.size());
  for (FaceId g : members) {
    VertexSet s(atoms.size());
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (L.leq(atoms[a], g)) s.insert(a);
    family.push_back(std::move(s));
  }
  return FaceLattice::from_face_family(atoms.size(), std::move(family));
}

/// Lattice of the face F viewed as a polytope: [empty, F].
inline FaceLattice face_lattice_of(const FaceLattice& L, FaceId f) { return interval(L, L.bottom(), f); }
/// Lattice of the quotient polytope P/F: [F, P].
inline FaceLattice quotient(const FaceLattice& L, FaceId f) { return interval(L, f, L.top()); }

/// Order-reversed lattice; the atoms of the dual are the facets of L.
inline FaceLattice dual(const FaceLattice& L) {
  if (L.dim() <= 0) return L;  // empty polytope and point are self-dual
  auto facets = L.faces_of_dim(L.dim() - 1);
  std::vector<VertexSet> family;
  family.reserve(L.size());
  for (FaceId f = 0; f < L.size(); ++f) {
    VertexSet s(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (L.leq(f, facets[i])) s.insert(i);
    family.push_back(std::move(s));
  }
  return FaceLattice::from_face_family(facets.size(), std::move(family));
}

/// Pyramid (cone) CQ: faces F and F + apex for every face F. Apex is the last atom.
inline FaceLattice pyramid(const FaceLattice& L) {
  const std::size_t n = L.n_vertices();
  std::vector<VertexSet> family;
  for (const auto& f : L.faces()) {
    VertexSet a(n + 1), b(n + 1);
    for (auto v : f.vertices.members()) {
      a.insert(v);
      b.insert(v);
    }
    b.insert(n);
    family.push_back(std::move(a));
    family.push_back(std::move(b));
  }
  return FaceLattice::from_face_family(n + 1, std::move(family));
}

/// Bipyramid BQ over a polytope of dim >= 0; the two apexes are the last atoms.
inline FaceLattice bipyramid(const FaceLattice& L) {
  if (L.dim() < 0) throw InputError("bipyramid over the empty polytope");
  const std::size_t n = L.n_vertices();
  std::vector<VertexSet> family;
  for (FaceId f = 0; f < L.size(); ++f) {
    if (f == L.top()) continue;
    VertexSet a(n + 2);
    for (auto v : L.face(f).vertices.members()) a.insert(v);
    VertexSet b = a, c = a;
    b.insert(n);
    c.insert(n + 1);
    family.push_back(std::move(a));
    family.push_back(std::move(b));
    family.push_back(std::move(c));
  }
  family.push_back(VertexSet::full(n + 2));
  return FaceLattice::from_face_family(n + 2, std::move(family));
}

/// Prism Q x [0,1]. Vertex v maps to v (bottom copy) and n + v (top copy).
inline FaceLattice prism(const FaceLattice& L) {
  if (L.dim() < 0) throw InputError("prism over the empty polytope");
  const std::size_t n = L.n_vertices();
  std::vector<VertexSet> family;
  family.push_back(VertexSet(2 * n));
  for (FaceId f = 1; f < L.size(); ++f) {
    VertexSet lo(2 * n), hi(2 * n);
    for (auto v : L.face(f).vertices.members()) {
      lo.insert(v);
      hi.insert(n + v);
    }
    family.push_back(lo);
    family.push_back(hi);
    family.push_back(lo | hi);
  }
  return FaceLattice::from_face_family(2 * n, std::move(family));
}

}  // namespace toricg
