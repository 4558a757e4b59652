#include "mckaykit/symplectic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mckaykit;

namespace {

CycloNum random_cyclo(std::mt19937_64& rng, int N) {
  int phi = cyclo_ctx(N)->phi;
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(phi);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return CycloNum(N, c);
}

}  // namespace

TEST(Rational, ArithmeticAndOverflow) {
  Rational a(1, 3), b(-2, 6);
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ(a * Rational(3), Rational(1));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  Rational big(INT64_MAX);
  Rational sq = big * big;
  EXPECT_TRUE(sq.is_big());
  EXPECT_EQ(sq / big, big);
  EXPECT_FALSE((sq / big).is_big());
  EXPECT_EQ(Rational::parse("170141183460469231722463931679029329920/3").str(),
            "56713727820156410574154643893009776640");
  EXPECT_EQ(Rational::parse("6/-4"), Rational(-3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1).inv() * Rational(0).inv(), std::domain_error);
}

TEST(Cyclo, RootsOfUnity) {
  for (int N : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15}) {
    CycloNum z = CycloNum::zeta(N);
    CycloNum p(1);
    for (int k = 0; k < N; ++k) p *= z;
    EXPECT_TRUE(p.is_one()) << N;
    CycloNum s;
    for (int k = 0; k < N; ++k) s += CycloNum::zeta(N, k);
    if (N > 1) {
      EXPECT_TRUE(s.is_zero()) << N;
    }
  }
  // zeta_4 = i
  CycloNum i = CycloNum::zeta(4);
  EXPECT_EQ(i * i, CycloNum(-1));
  // 2cos(2pi/5) satisfies x^2 + x - 1 = 0
  CycloNum c = CycloNum::zeta(5, 1) + CycloNum::zeta(5, -1);
  EXPECT_TRUE((c * c + c - CycloNum(1)).is_zero());
}

TEST(Cyclo, FieldAxiomsRandom) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int N = 1 + static_cast<int>(rng() % 12);
    int M = 1 + static_cast<int>(rng() % 12);
    CycloNum a = random_cyclo(rng, N), b = random_cyclo(rng, M), c = random_cyclo(rng, N);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inv()).is_one());
    }
    int L = std::lcm(N, M);
    EXPECT_EQ((a + b).promote(L), a.promote(L) + b.promote(L));
    EXPECT_EQ((a * b).promote(2 * L), a.promote(2 * L) * b.promote(2 * L));
    EXPECT_EQ(a.promote(L), a);
  }
}

TEST(Exactlin, RankExamples) {
  EXPECT_EQ(rank(Mat(2, 2)), 0u);
  EXPECT_EQ(rank(Mat::identity(4)), 4u);
  CycloNum z = CycloNum::zeta(3);
  Mat M{{CycloNum(1), z}, {z * z, CycloNum(1)}};
  EXPECT_EQ(rank(M), 1u);
}

TEST(Exactlin, KernelExamples) {
  EXPECT_TRUE(kernel_basis(Mat::identity(3)).empty());
  EXPECT_EQ(kernel_basis(Mat(3, 3)).size(), 3u);
  Mat g{{CycloNum::zeta(4, 1), CycloNum(0)}, {CycloNum(0), CycloNum::zeta(4, -1)}};
  EXPECT_TRUE(kernel_basis(g - Mat::identity(2)).empty());
}

TEST(Exactlin, RankNullityRandom) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    int N = 1 + static_cast<int>(rng() % 12);
    Mat m(r, c);
    // low-rank products make the kernel nontrivial often
    std::size_t k = 1 + rng() % std::min(r, c);
    Mat a(r, k), b(k, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = random_cyclo(rng, N);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = random_cyclo(rng, N);
    m = a * b;
    auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
  }
}

TEST(Exactlin, SolveAndInverse) {
  Mat m{{CycloNum(2), CycloNum(1)}, {CycloNum(1), CycloNum(1)}};
  auto x = solve(m, {CycloNum(3), CycloNum(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], CycloNum(1));
  EXPECT_EQ((*x)[1], CycloNum(1));
  EXPECT_EQ(inverse(m) * m, Mat::identity(2));
  Mat s{{CycloNum(1), CycloNum(1)}, {CycloNum(1), CycloNum(1)}};
  EXPECT_FALSE(solve(s, {CycloNum(1), CycloNum(0)}));
}

TEST(Exactlin, Charpoly) {
  // companion-style check: det(t - diag(1,2,3)) = t^3 - 6t^2 + 11t - 6
  QMat d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  auto c = charpoly(d);
  EXPECT_EQ(c, (std::vector<Rational>{-6, 11, -6, 1}));
}

TEST(Symplectic, FixedSpaceAndForm) {
  SympSpace V = SympSpace::standard(2);
  EXPECT_EQ(fixed_space(Mat::identity(4)).size(), 4u);
  Mat minus = Mat::identity(2);
  minus(0, 0) = CycloNum(-1);
  minus(1, 1) = CycloNum(-1);
  EXPECT_TRUE(fixed_space(minus).empty());

  std::vector<std::vector<CycloNum>> all;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<CycloNum> e(4);
    e[i] = CycloNum(1);
    all.push_back(e);
  }
  EXPECT_EQ(restrict_form(V, all), V.form);
  Mat line = restrict_form(V, {all[0]});
  EXPECT_EQ(line.rows(), 1u);
  EXPECT_TRUE(line(0, 0).is_zero());
  EXPECT_THROW(restrict_form(V, {all[0], all[0]}), std::invalid_argument);
  EXPECT_THROW(SympSpace(Mat::identity(2)), std::invalid_argument);
}
