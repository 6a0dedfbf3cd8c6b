#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toricg;

namespace {

GeometricPolytope geo(const char* name) { return *parse_catalog_expression(name).geometry; }

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::size_t facet_size(const GeometricPolytope& P, std::size_t k) { return P.facets[k].vertices.count(); }

}  // namespace

TEST(Shelling, PrismExample) {
  auto P = geo("prism(simplex2)");
  auto S = line_shelling(P, vec({-1, Rational(5, 2), 3}), 0);
  EXPECT_EQ(S.attempts, 1);
  ASSERT_EQ(S.facet_order.size(), 5u);
  EXPECT_EQ(facet_size(P, S.facet_order[0]), 3u);
  EXPECT_EQ(facet_size(P, S.facet_order[3]), 3u);
  auto R = shelling_decomposition(P, S);
  EXPECT_TRUE(R.ok());
  std::vector<Polynomial> expect{Polynomial{0, 0, 0, 1}, Polynomial{0, 0, 2}, Polynomial{0, 1, 1}, Polynomial{0, 1},
                                 Polynomial{1, 1}};
  EXPECT_EQ(R.local_polynomials(), expect);
  EXPECT_EQ(R.toric_h, (Polynomial{1, 3, 3, 1}));
}

TEST(Shelling, Square) {
  auto P = geo("square");
  auto S = line_shelling(P, vec({1, 2}), 0);
  auto R = shelling_decomposition(P, S);
  EXPECT_TRUE(R.ok());
  // partial unions of a line shelling of a polygon are paths: each new edge
  // meets the earlier ones in exactly one vertex until the last
  const auto& L = P.lattice;
  auto fids = L.faces_of_dim(1);
  for (std::size_t j = 1; j + 1 < S.facet_order.size(); ++j) {
    std::vector<FaceId> earlier;
    for (std::size_t i = 0; i < j; ++i) earlier.push_back(fids[S.facet_order[i]]);
    auto I = complex_of(L, earlier);
    std::size_t shared = 0;
    for (FaceId v : L.strictly_below(fids[S.facet_order[j]]))
      if (v != L.bottom() && I[v]) ++shared;
    EXPECT_EQ(shared, 1u);
  }
}

TEST(Shelling, SimplexLocalPolynomialsArePowers) {
  for (int d = 1; d <= 5; ++d) {
    auto P = *parse_catalog_expression("simplex" + std::to_string(d)).geometry;
    auto R = shelling_decomposition(P, line_shelling(P, 3));
    ASSERT_TRUE(R.ok());
    std::vector<Polynomial> locals = R.local_polynomials();
    for (std::size_t j = 0; j < locals.size(); ++j) {
      EXPECT_EQ(locals[j], Polynomial::monomial(1, d - j)) << d << " " << j;
    }
  }
}

TEST(Shelling, NonGenericDirectionRetries) {
  auto P = geo("cube3");
  // (1,0,0) is parallel to four facets
  auto S = line_shelling(P, vec({1, 0, 0}), 99);
  EXPECT_GT(S.attempts, 1);
  EXPECT_TRUE(shelling_decomposition(P, S).ok());
  // same seed, same outcome
  auto S2 = line_shelling(P, vec({1, 0, 0}), 99);
  EXPECT_EQ(S.facet_order, S2.facet_order);
  EXPECT_EQ(S.direction, S2.direction);
  EXPECT_THROW(line_shelling(P, vec({1, 0, 0}), 99, 1), Error);
  EXPECT_THROW(line_shelling(P, vec({1, 0}), 99), InputError);
}

TEST(Shelling, RelativeH) {
  auto P = geo("cube3");
  const auto& L = P.lattice;
  FaceSubset all(L.size(), true), none(L.size(), false);
  all[L.top()] = false;
  EXPECT_EQ(relative_h(L, all, none), toric_h(L));
  // first facet alone: t^d g(F, 1/t)
  FaceId F = L.faces_of_dim(2).front();
  auto I1 = complex_of(L, {F});
  EXPECT_EQ(relative_h(L, I1, none), toric_g(face_lattice_of(L, F)).reversed(3));
  EXPECT_THROW(relative_h(L, none, I1), InputError);
  FaceSubset open = I1;
  open[L.bottom()] = false;
  EXPECT_THROW(relative_h(L, open, none), InputError);
}

TEST(ShellingProperty, CatalogSample) {
  for (const char* n : {"cube3", "cube4", "cross4", "cyclic(8,4)", "prism(pyramid(square))", "bipyramid(cube3)",
                        "cyclic(9,5)", "pyramid(cube4)"}) {
    auto P = geo(n);
    ToricTable T(P.lattice);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto S = line_shelling(P, seed);
      auto R = shelling_decomposition(P, S);
      EXPECT_TRUE(R.ok()) << n << " seed " << seed << ": " << (R.problems.empty() ? "" : R.problems.front());
      // h(I_j, I_{j-1}, 1) = g(F_j, 1)
      const auto fids = P.lattice.faces_of_dim(P.dim - 1);
      for (const auto& step : R.steps) EXPECT_EQ(step.local_h.eval(1), T.g_face(fids[step.facet]).eval(1));
      // last step is g(F_r, t)
      EXPECT_EQ(R.steps.back().local_h, T.g_face(fids[R.steps.back().facet]));
      // reversing the line reverses the order and reverses each local polynomial
      RationalVector minus = S.direction;
      for (auto& x : minus) x = -x;
      auto Sr = line_shelling(P, minus, seed);
      ASSERT_EQ(Sr.attempts, 1);
      std::vector<std::size_t> rev(S.facet_order.rbegin(), S.facet_order.rend());
      EXPECT_EQ(Sr.facet_order, rev);
      auto Rr = shelling_decomposition(P, Sr);
      const std::size_t r = R.steps.size();
      for (std::size_t j = 0; j < r; ++j) EXPECT_EQ(Rr.steps[r - 1 - j].local_h, R.steps[j].local_h.reversed(P.dim));
    }
  }
}
