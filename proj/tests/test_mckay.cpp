#include "mckaykit/catalog.hpp"
#include "mckaykit/mckay.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace mckaykit;

namespace {

std::size_t class_with_size(const MatrixGroup& G, std::size_t s) {
  for (std::size_t c = 0; c < G.classes().size(); ++c)
    if (G.classes()[c].size() == s) return c;
  throw std::logic_error("no class of that size");
}

// Product of polynomials in t given as coefficient vectors.
std::vector<long long> polymul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST(ReflectionRank, Examples) {
  EXPECT_EQ(reflection_rank(Mat::identity(4)), 0u);
  Mat g(2, 2);
  g(0, 0) = CycloNum::zeta(6, 1);
  g(1, 1) = CycloNum::zeta(6, -1);
  EXPECT_EQ(reflection_rank(g), 2u);
  auto S3 = weyl_group('A', 2);
  EXPECT_EQ(S3.classes()[class_with_size(S3, 2)].degree, 4);
  EXPECT_EQ(S3.classes()[class_with_size(S3, 3)].degree, 2);
}

TEST(Reflections, Counts) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(symplectic_reflections(sl2_subgroup("cyclic", n)).size(), std::size_t(n - 1));
  EXPECT_EQ(symplectic_reflections(weyl_group('G', 2)).size(), 2u);
  EXPECT_EQ(symplectic_reflections(weyl_group('B', 3)).size(), 2u);
  EXPECT_EQ(symplectic_reflections(weyl_group('A', 3)).size(), 1u);
}

TEST(GrCenter, Z2) {
  auto G = sl2_subgroup("cyclic", 2);
  auto gc = gr_center(G);
  EXPECT_EQ(gc.degrees, (std::vector<int>{0, 2}));
  EXPECT_EQ(gc.poincare, (std::vector<long long>{1, 0, 1}));
  for (const auto& sc : gc.constants) EXPECT_FALSE(sc.i == 1 && sc.j == 1);
  ASSERT_EQ(gc.dropped.size(), 1u);
  EXPECT_EQ(gc.dropped[0].k, 0u);
  EXPECT_EQ(betti_of_resolution(gc), (std::vector<long long>{1, 0, 1}));
  EXPECT_EQ(betti_of_resolution(gr_center(symmetric_group(2))), (std::vector<long long>{1, 0, 1, 0, 0}));
  EXPECT_EQ(betti_of_resolution(gr_center(sl2_subgroup("cyclic", 1))), (std::vector<long long>{1, 0, 0}));
}

TEST(GrCenter, S3) {
  auto G = weyl_group('A', 2);
  auto gc = gr_center(G);
  std::size_t T = class_with_size(G, 3), R = class_with_size(G, 2);
  std::map<std::size_t, Rational> tt;
  for (const auto& sc : gc.constants)
    if (sc.i == T && sc.j == T) tt[sc.k] = sc.c;
  EXPECT_EQ(tt.size(), 1u);
  EXPECT_EQ(tt[R], Rational(3));
  EXPECT_EQ(gc.poincare, (std::vector<long long>{1, 0, 1, 0, 1}));
}

TEST(GrCenter, UnitCommutativeAssociative) {
  for (const MatrixGroup& G : {weyl_group('B', 3), weyl_group('G', 2), sl2_subgroup("binary-dihedral", 5),
                               symmetric_group(4)}) {
    auto gc = gr_center(G);
    std::size_t m = gc.degrees.size();
    std::vector<std::vector<std::vector<Rational>>> c(
        m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m)));
    for (const auto& sc : gc.constants) c[sc.i][sc.j][sc.k] = sc.c;
    EXPECT_EQ(gc.degrees[0], 0);
    for (std::size_t i = 1; i < m; ++i) {
      EXPECT_GT(gc.degrees[i], 0);
      EXPECT_EQ(gc.degrees[i] % 2, 0);
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) EXPECT_EQ(c[0][i][k], Rational(i == k ? 1 : 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          EXPECT_EQ(c[i][j][k], c[j][i][k]);
          if (!c[i][j][k].is_zero()) {
            EXPECT_EQ(gc.degrees[k], gc.degrees[i] + gc.degrees[j]);
          }
          for (std::size_t l = 0; l < m; ++l) {
            Rational lhs, rhs;
            for (std::size_t t = 0; t < m; ++t) {
              lhs += c[i][j][t] * c[t][k][l];
              rhs += c[j][k][t] * c[i][t][l];
            }
            EXPECT_EQ(lhs, rhs);
          }
        }
    EXPECT_EQ(gc.poincare, orbifold_poincare(G));
  }
}

TEST(OrbifoldPoincare, Examples) {
  for (int n = 1; n <= 9; ++n) {
    std::vector<long long> want{1, 0, n - 1};
    EXPECT_EQ(orbifold_poincare(sl2_subgroup("cyclic", n)), want);
  }
  EXPECT_EQ(orbifold_poincare(weyl_group('A', 2)), (std::vector<long long>{1, 0, 1, 0, 1}));
}

TEST(OrbifoldPoincare, Kunneth) {
  auto A = sl2_subgroup("cyclic", 2), B = sl2_subgroup("cyclic", 3), C = weyl_group('A', 2);
  EXPECT_EQ(orbifold_poincare(direct_product(A, B)), polymul(orbifold_poincare(A), orbifold_poincare(B)));
  EXPECT_EQ(orbifold_poincare(direct_product(C, A)), polymul(orbifold_poincare(C), orbifold_poincare(A)));
}

TEST(Rees, Examples) {
  auto Z2 = sl2_subgroup("cyclic", 2);
  auto rz = rees_center(Z2, class_algebra(Z2));
  bool found = false;
  for (const auto& t : rz)
    if (t.i == 1 && t.j == 1) {
      EXPECT_EQ(t.k, 0u);
      EXPECT_EQ(t.c, 1);
      EXPECT_EQ(t.u_power, 4);
      found = true;
    }
  EXPECT_TRUE(found);

  auto S3 = weyl_group('A', 2);
  auto alg = class_algebra(S3);
  auto rs = rees_center(S3, alg);
  auto gc = gr_center(S3, alg);
  std::size_t m = S3.classes().size();
  std::vector<std::vector<std::vector<long long>>> at1(m, std::vector<std::vector<long long>>(m, std::vector<long long>(m)));
  std::size_t at0 = 0;
  for (const auto& t : rs) {
    EXPECT_GE(t.u_power, 0);
    EXPECT_EQ(t.u_power % 2, 0);
    at1[t.i][t.j][t.k] += t.c;
    if (t.u_power == 0) ++at0;
    if (t.i == 0) {
      EXPECT_EQ(t.u_power, 0);
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(at1[i][j], S3.class_sum_product(i, j));
  EXPECT_EQ(at0, gc.constants.size());
}

TEST(LemmaEasy, Examples) {
  auto K = direct_product(sl2_subgroup("cyclic", 2), sl2_subgroup("cyclic", 2));
  auto rep = check_lemma_easy(K);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.pairs, 16u);
  // (e, x) and (x, e) give 7 pairs; the two block generators add 2 more
  EXPECT_EQ(rep.applicable, 9u);
  for (const MatrixGroup& G : {weyl_group('B', 3), sl2_subgroup("binary-dihedral", 3), sl2_subgroup("cyclic", 5)})
    EXPECT_TRUE(check_lemma_easy(G).pass);
}
