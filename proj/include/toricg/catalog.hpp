#pragma once

#include "toricg/face_lattice.hpp"
#include "toricg/geometry.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toricg {

/// A named polytope: its lattice, plus coordinates when a realization is
/// cheap enough to run facet enumeration on.
struct CatalogEntry {
  std::string name;
  FaceLattice lattice;
  std::optional<GeometricPolytope> geometry;

  int dim() const { return lattice.dim(); }
};

/// Polytopes with more vertices than this (or dimension above kMaxGeometricDim)
/// are kept lattice-only; brute-force facet enumeration grows like n^d.
inline constexpr std::size_t kMaxGeometricVertices = 32;
inline constexpr int kMaxGeometricDim = 5;

namespace recipes {

inline FaceLattice simplex_lattice(int d) {
  FaceLattice L = FaceLattice::empty_polytope();
  for (int i = 0; i <= d; ++i) L = pyramid(L);
  return L;
}

inline FaceLattice cube_lattice(int d) {
  FaceLattice L = simplex_lattice(0);
  for (int i = 0; i < d; ++i) L = prism(L);
  return L;
}

// vertex 2i is +e_i, 2i+1 is -e_i
inline FaceLattice cross_lattice(int d) {
  FaceLattice L = simplex_lattice(0);
  if (d == 0) return L;
  std::vector<std::vector<std::size_t>> facets;
  for (std::uint32_t signs = 0; signs < (1u << d); ++signs) {
    std::vector<std::size_t> f;
    for (int i = 0; i < d; ++i) f.push_back(2 * i + ((signs >> i) & 1));
    facets.push_back(std::move(f));
  }
  return FaceLattice::from_vertex_facets(2 * d, facets);
}

// Gale's evenness condition.
inline FaceLattice cyclic_lattice(int n, int d) {
  std::vector<std::vector<std::size_t>> facets;
  std::vector<std::size_t> pick;
  auto even = [&](const std::vector<std::size_t>& s) {
    std::vector<bool> in(n, false);
    for (auto v : s) in[v] = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (in[i] || in[j]) continue;
        int between = 0;
        for (int k = i + 1; k < j; ++k) between += in[k];
        if (between % 2) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == d) {
      if (even(pick)) facets.push_back(pick);
      return;
    }
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return FaceLattice::from_vertex_facets(n, facets);
}

inline std::vector<RationalVector> simplex_points(int d) {
  std::vector<RationalVector> pts(d + 1, RationalVector(d, 0));
  for (int i = 0; i < d; ++i) pts[i + 1][i] = 1;
  return pts;
}

inline std::vector<RationalVector> cube_points(int d) {
  std::vector<RationalVector> pts;
  for (std::uint32_t m = 0; m < (1u << d); ++m) {
    RationalVector p(d);
    for (int i = 0; i < d; ++i) p[i] = (m >> i) & 1;
    pts.push_back(std::move(p));
  }
  return pts;
}

inline std::vector<RationalVector> cross_points(int d) {
  std::vector<RationalVector> pts;
  for (int i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      RationalVector p(d, 0);
      p[i] = s;
      pts.push_back(std::move(p));
    }
  return pts;
}

// moment curve at t = 0, 1, ..., n-1
inline std::vector<RationalVector> cyclic_points(int n, int d) {
  std::vector<RationalVector> pts;
  for (int t = 0; t < n; ++t) {
    RationalVector p(d);
    Integer x = 1;
    for (int i = 0; i < d; ++i) {
      x *= t;
      p[i] = Rational(x);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

inline RationalVector lifted(const RationalVector& p, Rational h) {
  RationalVector q = p;
  q.push_back(std::move(h));
  return q;
}

inline RationalVector average(const std::vector<RationalVector>& pts) {
  RationalVector c(pts.empty() ? 0 : pts[0].size());
  for (const auto& p : pts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (auto& x : c) x /= static_cast<long>(pts.size());
  return c;
}

inline std::vector<RationalVector> pyramid_points(const std::vector<RationalVector>& P) {
  std::vector<RationalVector> pts;
  for (const auto& p : P) pts.push_back(lifted(p, 0));
  pts.push_back(lifted(P.empty() ? RationalVector{} : average(P), 1));
  return pts;
}

inline std::vector<RationalVector> bipyramid_points(const std::vector<RationalVector>& P) {
  std::vector<RationalVector> pts;
  for (const auto& p : P) pts.push_back(lifted(p, 0));
  pts.push_back(lifted(average(P), 1));
  pts.push_back(lifted(average(P), -1));
  return pts;
}

inline std::vector<RationalVector> prism_points(const std::vector<RationalVector>& P) {
  std::vector<RationalVector> pts;
  for (const auto& p : P) pts.push_back(lifted(p, 0));
  for (const auto& p : P) pts.push_back(lifted(p, 1));
  return pts;
}

inline bool affordable(std::size_t n_points, int d) {
  return d >= 0 && d <= kMaxGeometricDim && n_points <= kMaxGeometricVertices;
}

}  // namespace recipes

/// Recursive-descent parser for catalog expressions:
///   expr := base | op '(' expr ')' | 'cyclic' '(' int ',' int ')'
///   base := simplexN | cubeN | crossN | simplex(N) | cube(N) | cross(N)
///         | point | segment | triangle | square | octahedron | empty
///   op   := pyramid | bipyramid | prism | dual
/// Geometry is attached when `with_geometry` is set and the result is small
/// enough; `dual` is always lattice-only.
class CatalogParser {
 public:
  CatalogParser(std::string_view text, bool with_geometry) : s_(text), geometric_(with_geometry) {}

  CatalogEntry parse() {
    skip();
    Node n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing text");
    CatalogEntry e{std::string(s_), std::move(n.lattice), std::nullopt};
    if (geometric_ && n.points && recipes::affordable(n.points->size(), e.lattice.dim()))
      e.geometry = facet_enumeration(*n.points);
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  bool geometric_;

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polytope expression '" + std::string(s_) + "' at position " + std::to_string(pos_) +
                     ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  std::optional<int> number() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) return std::nullopt;
    if (pos_ - b > 3) fail("number too large");
    return std::stoi(std::string(s_.substr(b, pos_ - b)));
  }
  int size_arg() {
    if (auto n = number()) return *n;
    expect('(');
    auto n = number();
    if (!n) fail("expected an integer");
    expect(')');
    return *n;
  }

  // Intermediate result: every listed point is a vertex, in lattice atom
  // order, and the points span their ambient space.
  struct Node {
    FaceLattice lattice;
    std::optional<std::vector<RationalVector>> points;
  };

  static Node make(FaceLattice L, std::optional<std::vector<RationalVector>> pts) { return {std::move(L), std::move(pts)}; }

  Node expr() {
    const std::size_t start = pos_;
    std::string w = word();
    if (w.empty()) fail("expected a polytope name");
    if (w == "empty") return make(FaceLattice::empty_polytope(), std::vector<RationalVector>{});
    if (w == "point") return make(recipes::simplex_lattice(0), recipes::simplex_points(0));
    if (w == "segment") return make(recipes::simplex_lattice(1), recipes::simplex_points(1));
    if (w == "triangle") return make(recipes::simplex_lattice(2), recipes::simplex_points(2));
    if (w == "square") return make(recipes::cube_lattice(2), recipes::cube_points(2));
    if (w == "octahedron") return make(recipes::cross_lattice(3), recipes::cross_points(3));
    if (w == "simplex" || w == "cube" || w == "cross") {
      int d = size_arg();
      if (d > 12) fail("dimension too large");
      if (w == "simplex") return make(recipes::simplex_lattice(d), recipes::simplex_points(d));
      if (w == "cube") return make(recipes::cube_lattice(d), recipes::cube_points(d));
      if (d < 1) fail("cross-polytope needs dimension >= 1");
      return make(recipes::cross_lattice(d), recipes::cross_points(d));
    }
    if (w == "cyclic") {
      expect('(');
      auto n = number();
      if (!n) fail("expected vertex count");
      expect(',');
      auto d = number();
      if (!d) fail("expected dimension");
      expect(')');
      if (*d < 2 || *n <= *d) fail("cyclic(n,d) needs d >= 2 and n > d");
      if (*n > 64) fail("cyclic polytope too large");
      return make(recipes::cyclic_lattice(*n, *d), recipes::cyclic_points(*n, *d));
    }
    if (w == "pyramid" || w == "bipyramid" || w == "prism" || w == "dual") {
      expect('(');
      Node inner = expr();
      expect(')');
      if (w == "dual") return make(dual(inner.lattice), std::nullopt);
      if (inner.lattice.dim() < 0 && w != "pyramid") fail(w + " of the empty polytope");
      std::optional<std::vector<RationalVector>> pts;
      if (inner.points) {
        if (w == "pyramid") pts = recipes::pyramid_points(*inner.points);
        else if (w == "bipyramid") pts = recipes::bipyramid_points(*inner.points);
        else pts = recipes::prism_points(*inner.points);
      }
      FaceLattice L = w == "pyramid" ? pyramid(inner.lattice) : w == "bipyramid" ? bipyramid(inner.lattice) : prism(inner.lattice);
      return make(std::move(L), std::move(pts));
    }
    pos_ = start;
    fail("unknown polytope '" + w + "'");
  }
};

inline CatalogEntry parse_catalog_expression(std::string_view text, bool with_geometry = true) {
  return CatalogParser(text, with_geometry).parse();
}

/// Names of the standard catalog: simplices, cubes and cross-polytopes up to
/// dimension 6, cyclic polytopes with n <= 10, their pyramids, bipyramids and
/// prisms up to dimension 6, and some deeper compositions of small polytopes.
inline std::vector<std::string> catalog_names() {
  std::vector<std::pair<std::string, int>> bases;
  for (int d = 0; d <= 6; ++d) bases.emplace_back("simplex" + std::to_string(d), d);
  for (int d = 2; d <= 6; ++d) bases.emplace_back("cube" + std::to_string(d), d);
  for (int d = 3; d <= 6; ++d) bases.emplace_back("cross" + std::to_string(d), d);
  for (int d = 2; d <= 6; ++d)
    for (int n = d + 2; n <= 10; ++n) bases.emplace_back("cyclic(" + std::to_string(n) + "," + std::to_string(d) + ")", d);

  std::vector<std::string> names;
  std::set<std::string> seen;
  auto add = [&](const std::string& s) {
    if (seen.insert(s).second) names.push_back(s);
  };
  for (const auto& [b, d] : bases) add(b);
  for (const auto& [b, d] : bases)
    if (d >= 1 && d <= 5)
      for (const char* op : {"pyramid", "bipyramid", "prism"}) add(std::string(op) + "(" + b + ")");
  const char* ops[] = {"pyramid", "bipyramid", "prism"};
  for (const char* small : {"simplex1", "simplex2", "cube2", "cyclic(5,2)", "simplex3", "cube3", "cross3"})
    for (const char* a : ops)
      for (const char* b : ops) add(std::string(a) + "(" + b + "(" + small + "))");
  for (const char* small : {"simplex2", "cube2"})
    for (const char* a : ops)
      for (const char* b : ops)
        for (const char* c : ops) add(std::string(a) + "(" + b + "(" + c + "(" + small + ")))");
  return names;
}

inline std::vector<CatalogEntry> build_catalog(bool with_geometry = true) {
  std::vector<CatalogEntry> out;
  for (const auto& n : catalog_names()) out.push_back(parse_catalog_expression(n, with_geometry));
  return out;
}

}  // namespace toricg
