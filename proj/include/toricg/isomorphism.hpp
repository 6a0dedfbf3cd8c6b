#pragma once

#include "toricg/face_lattice.hpp"

#include <map>
#include <unordered_set>
#include <vector>

namespace toricg {

namespace detail {

// Bipartite atom/facet incidence graph; nodes [0, n_atoms) are atoms, the
// rest are facets. A face lattice is determined by its facet family, so an
// incidence isomorphism that maps atoms to atoms is a lattice isomorphism.
struct Incidence {
  std::size_t n_atoms = 0;
  std::vector<std::vector<std::size_t>> adj;
  std::unordered_set<VertexSet, VertexSetHash> facet_sets;
};

inline Incidence incidence_of(const FaceLattice& L) {
  Incidence g;
  g.n_atoms = L.n_vertices();
  auto facets = L.faces_of_dim(L.dim() - 1);
  g.adj.assign(g.n_atoms + facets.size(), {});
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& vs = L.face(facets[i]).vertices;
    g.facet_sets.insert(vs);
    for (auto v : vs.members()) {
      g.adj[v].push_back(g.n_atoms + i);
      g.adj[g.n_atoms + i].push_back(v);
    }
  }
  return g;
}

// Joint colour refinement of two graphs so that colour ids are comparable.
// Returns false as soon as the colour class histograms differ.
inline bool refine(const Incidence& a, const Incidence& b, std::vector<int>& ca, std::vector<int>& cb) {
  auto histogram = [](const std::vector<int>& c) {
    std::map<int, std::size_t> h;
    for (int x : c) ++h[x];
    return h;
  };
  std::size_t classes = histogram(ca).size();
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto recolour = [&](const Incidence& g, const std::vector<int>& c) {
      std::vector<int> out(c.size());
      for (std::size_t v = 0; v < c.size(); ++v) {
        std::vector<int> nb;
        nb.reserve(g.adj[v].size());
        for (auto w : g.adj[v]) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
        auto key = std::make_pair(c[v], std::move(nb));
        auto it = ids.find(key);
        if (it == ids.end()) it = ids.emplace(std::move(key), static_cast<int>(ids.size())).first;
        out[v] = it->second;
      }
      return out;
    };
    auto na = recolour(a, ca);
    auto nb = recolour(b, cb);
    auto ha = histogram(na), hb = histogram(nb);
    if (ha != hb) return false;
    ca = std::move(na);
    cb = std::move(nb);
    if (ha.size() == classes) return true;
    classes = ha.size();
  }
}

inline bool search(const Incidence& a, const Incidence& b, std::vector<int> ca, std::vector<int> cb) {
  if (!refine(a, b, ca, cb)) return false;
  // pick the smallest non-singleton atom class
  std::map<int, std::size_t> sizes;
  for (std::size_t v = 0; v < a.n_atoms; ++v) ++sizes[ca[v]];
  int target = -1;
  std::size_t best = 0;
  for (auto [c, s] : sizes)
    if (s > 1 && (target < 0 || s < best)) {
      target = c;
      best = s;
    }
  if (target < 0) {
    // atoms are individualized: read off the bijection and test it
    std::vector<std::size_t> image(a.n_atoms);
    std::map<int, std::size_t> where;
    for (std::size_t v = 0; v < b.n_atoms; ++v) where[cb[v]] = v;
    for (std::size_t v = 0; v < a.n_atoms; ++v) image[v] = where.at(ca[v]);
    for (std::size_t f = a.n_atoms; f < a.adj.size(); ++f) {
      VertexSet s(b.n_atoms);
      for (auto v : a.adj[f]) s.insert(image[v]);
      if (!b.facet_sets.count(s)) return false;
    }
    return true;
  }
  std::size_t pick = 0;
  while (ca[pick] != target) ++pick;
  const int fresh = 1 + std::max(*std::max_element(ca.begin(), ca.end()), *std::max_element(cb.begin(), cb.end()));
  for (std::size_t w = 0; w < b.n_atoms; ++w) {
    if (cb[w] != target) continue;
    auto na = ca, nb = cb;
    na[pick] = fresh;
    nb[w] = fresh;
    if (search(a, b, std::move(na), std::move(nb))) return true;
  }
  return false;
}

}  // namespace detail

/// Lattice isomorphism by colour refinement on the atom/facet incidence graph
/// with individualization backtracking.
inline bool isomorphic(const FaceLattice& x, const FaceLattice& y) {
  if (x.dim() != y.dim() || x.size() != y.size() || x.n_vertices() != y.n_vertices()) return false;
  if (x.f_vector() != y.f_vector()) return false;
  if (x.dim() <= 0) return true;
  auto a = detail::incidence_of(x);
  auto b = detail::incidence_of(y);
  if (a.adj.size() != b.adj.size()) return false;
  std::vector<int> ca(a.adj.size()), cb(b.adj.size());
  for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = v < a.n_atoms ? 0 : 1;
  for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = v < b.n_atoms ? 0 : 1;
  return detail::search(a, b, std::move(ca), std::move(cb));
}

}  // namespace toricg
