#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toricg;

namespace {

FaceLattice square() { return lattice_from_vertex_facets(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
FaceLattice cube3() { return recipes::cube_lattice(3); }

}  // namespace

TEST(FaceLattice, Triangle) {
  auto L = lattice_from_vertex_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(L.size(), 8u);
  EXPECT_EQ(L.dim(), 2);
  EXPECT_EQ(L.f_vector(), (std::vector<std::size_t>{3, 3}));
}

TEST(FaceLattice, Square) {
  auto L = square();
  EXPECT_EQ(L.f_vector(), (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(L.face(L.bottom()).dim, -1);
  EXPECT_TRUE(L.face(L.bottom()).vertices.empty());
  EXPECT_EQ(L.face(L.top()).dim, 2);
  EXPECT_TRUE(L.is_eulerian());
}

TEST(FaceLattice, OpenPathIsRejected) {
  // the path ends are not intersections of facets
  EXPECT_THROW(lattice_from_vertex_facets(4, {{0, 1}, {1, 2}, {2, 3}}), InputError);
  // three edges at vertex 0 give a witness interval
  try {
    lattice_from_vertex_facets(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    FAIL();
  } catch (const NotEulerianError& e) {
    EXPECT_NE(std::string(e.what()).find("not Eulerian"), std::string::npos);
  }
}

TEST(FaceLattice, BadInput) {
  EXPECT_THROW(lattice_from_vertex_facets(0, {{}}), InputError);
  EXPECT_THROW(lattice_from_vertex_facets(3, {}), InputError);
  EXPECT_THROW(lattice_from_vertex_facets(3, {{0, 1}, {0, 1, 2}}), InputError);
  EXPECT_THROW(lattice_from_vertex_facets(3, {{0, 5}, {1, 2}}), InputError);
  EXPECT_THROW(lattice_from_vertex_facets(4, {{0, 1}, {1, 2}, {0, 2}}), InputError);  // vertex 3 unused
}

TEST(FaceLattice, Intervals) {
  auto C = cube3();
  auto v = C.faces_of_dim(0).front();
  auto fig = quotient(C, v);
  EXPECT_EQ(fig.dim(), 2);
  EXPECT_EQ(fig.f_vector(), (std::vector<std::size_t>{3, 3}));
  EXPECT_TRUE(isomorphic(fig, recipes::simplex_lattice(2)));

  auto whole = interval(C, C.bottom(), C.top());
  EXPECT_TRUE(isomorphic(whole, C));
  EXPECT_EQ(whole.size(), C.size());

  for (FaceId f : {C.bottom(), v, C.top()}) {
    auto e = interval(C, f, f);
    EXPECT_EQ(e.size(), 1u);
    EXPECT_EQ(e.dim(), -1);
  }
  auto facet = C.faces_of_dim(2).front();
  EXPECT_THROW(interval(C, facet, v), InputError);
}

TEST(FaceLattice, IntervalDimensions) {
  auto L = recipes::cube_lattice(4);
  for (FaceId f = 0; f < L.size(); ++f) {
    EXPECT_EQ(face_lattice_of(L, f).dim(), L.face(f).dim);
    EXPECT_EQ(quotient(L, f).dim(), L.dim() - L.face(f).dim - 1);
  }
}

TEST(FaceLattice, Dual) {
  auto D = dual(cube3());
  EXPECT_EQ(D.f_vector(), (std::vector<std::size_t>{6, 12, 8}));
  EXPECT_TRUE(isomorphic(D, recipes::cross_lattice(3)));
  auto S = recipes::simplex_lattice(4);
  EXPECT_TRUE(isomorphic(dual(S), S));
  for (auto L : {cube3(), recipes::cyclic_lattice(7, 4), pyramid(square()), prism(recipes::simplex_lattice(2))})
    EXPECT_TRUE(isomorphic(dual(dual(L)), L));
  EXPECT_FALSE(isomorphic(D, cube3()));
}

TEST(FaceLattice, DualDimensions) {
  auto L = recipes::cyclic_lattice(7, 4);
  auto D = dual(L);
  const auto f = L.f_vector(), g = D.f_vector();
  for (int k = 0; k < L.dim(); ++k) EXPECT_EQ(f[k], g[L.dim() - 1 - k]);
}

TEST(FaceLattice, Constructions) {
  EXPECT_EQ(pyramid(square()).f_vector(), (std::vector<std::size_t>{5, 8, 5}));
  auto oct = bipyramid(square());
  EXPECT_EQ(oct.f_vector(), (std::vector<std::size_t>{6, 12, 8}));
  EXPECT_TRUE(isomorphic(oct, recipes::cross_lattice(3)));
  EXPECT_EQ(prism(recipes::simplex_lattice(2)).f_vector(), (std::vector<std::size_t>{6, 9, 5}));
  EXPECT_EQ(recipes::cube_lattice(4).f_vector(), (std::vector<std::size_t>{16, 32, 24, 8}));
  EXPECT_EQ(pyramid(FaceLattice::empty_polytope()).dim(), 0);
  EXPECT_THROW(bipyramid(FaceLattice::empty_polytope()), InputError);
  EXPECT_THROW(prism(FaceLattice::empty_polytope()), InputError);
}

TEST(FaceLattice, Eulerian) {
  EXPECT_TRUE(cube3().is_eulerian());
  EXPECT_TRUE(FaceLattice::empty_polytope().is_eulerian());
  // cube with one facet removed from the face family
  auto C = cube3();
  std::vector<VertexSet> family;
  const FaceId dropped = C.faces_of_dim(2).front();
  for (FaceId f = 0; f < C.size(); ++f)
    if (f != dropped) family.push_back(C.face(f).vertices);
  auto broken = FaceLattice::from_face_family(C.n_vertices(), family);
  EXPECT_FALSE(broken.is_eulerian());
  EXPECT_FALSE(oracle::eulerian(broken));
  auto w = broken.eulerian_witness();
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(broken.leq(w->first, w->second));
}

TEST(FaceLattice, NotGraded) {
  // a chain {} < {0} < {0,1} < {0,1,2} plus a skipping element breaks grading
  std::vector<VertexSet> fam{VertexSet::of(3, {}), VertexSet::of(3, {0}), VertexSet::of(3, {1}), VertexSet::of(3, {0, 1}),
                             VertexSet::of(3, {0, 1, 2}), VertexSet::of(3, {2})};
  EXPECT_THROW(FaceLattice::from_face_family(3, fam), NotGradedError);
}

TEST(FaceLatticeProperty, StructuralInvariants) {
  for (const auto& name : {"cube3", "cross4", "cyclic(8,4)", "prism(pyramid(square))", "bipyramid(cyclic(6,3))",
                           "simplex5", "dual(prism(cube3))"}) {
    auto L = parse_catalog_expression(name, false).lattice;
    SCOPED_TRACE(name);
    EXPECT_TRUE(oracle::eulerian(L) || L.size() > 400);
    EXPECT_TRUE(L.is_eulerian());
    // atoms are singletons and faces are unions of their atoms
    for (FaceId a : L.faces_of_dim(0)) EXPECT_EQ(L.face(a).vertices.count(), 1u);
    for (FaceId f = 1; f < L.size(); ++f) {
      VertexSet u(L.n_vertices());
      for (FaceId g : L.strictly_below(f))
        if (L.face(g).dim == 0) u |= L.face(g).vertices;
      if (L.face(f).dim == 0) u = L.face(f).vertices;
      EXPECT_EQ(u, L.face(f).vertices);
    }
    // graded: covers differ in dimension by exactly one
    for (FaceId f = 0; f < L.size(); ++f)
      for (FaceId g : L.face(f).upper) EXPECT_EQ(L.face(g).dim, L.face(f).dim + 1);
    // faces are unique by vertex set
    for (FaceId f = 0; f < L.size(); ++f) EXPECT_EQ(L.find(L.face(f).vertices), f);
  }
}

TEST(Isomorphism, RelabellingAndNonIsomorphicPairs) {
  // relabelled copy of the prism
  auto P = prism(recipes::simplex_lattice(2));
  auto facets = P.facet_vertex_sets();
  std::vector<std::size_t> perm{5, 3, 1, 0, 2, 4};
  for (auto& f : facets)
    for (auto& v : f) v = perm[v];
  EXPECT_TRUE(isomorphic(lattice_from_vertex_facets(6, facets), P));
  EXPECT_FALSE(isomorphic(pyramid(square()), recipes::simplex_lattice(3)));
  EXPECT_FALSE(isomorphic(recipes::cyclic_lattice(8, 4), dual(recipes::cyclic_lattice(8, 4))));
}
