#include "mckaykit/catalog.hpp"
#include "mckaykit/invariants.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mckaykit;

namespace {

QPoly random_poly(std::mt19937_64& rng, std::size_t n, int maxdeg, int terms) {
  QPoly f(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < terms; ++t) {
    Mono m(n, 0);
    int d = static_cast<int>(rng() % (maxdeg + 1));
    for (int k = 0; k < d; ++k) ++m[rng() % n];
    f.add_term(m, Rational(coef(rng)));
  }
  return f;
}

CPoly cvar(std::size_t n, std::size_t i) { return CPoly::var(n, i); }

}  // namespace

TEST(Poly, BracketExamples) {
  auto B = darboux_bivector<Rational>(1);
  QPoly x = QPoly::var(2, 0), y = QPoly::var(2, 1);
  EXPECT_EQ(bracket(x, y, B), QPoly::constant(2, Rational(1)));
  EXPECT_EQ(bracket(x * x, x * y, B), Rational(2) * (x * x));
  EXPECT_EQ(bracket(x * x, y * y, B), Rational(4) * (x * y));
  EXPECT_TRUE(bracket(QPoly::constant(2, Rational(5)), x * y, B).is_zero());
}

TEST(Poly, StandardBivectorNormalization) {
  auto V = SympSpace::standard(2);
  auto B = standard_bivector(V.form);
  EXPECT_EQ(bracket(cvar(4, 0), cvar(4, 2), B), CPoly::constant(4, CycloNum(1)));
  EXPECT_EQ(bracket(cvar(4, 1), cvar(4, 3), B), CPoly::constant(4, CycloNum(1)));
  EXPECT_TRUE(bracket(cvar(4, 0), cvar(4, 1), B).is_zero());
}

TEST(Poly, SkewLeibnizJacobiDegree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t half = 1 + rng() % 3;
    std::size_t n = 2 * half;
    auto B = darboux_bivector<Rational>(half);
    QPoly f = random_poly(rng, n, 4, 4), g = random_poly(rng, n, 4, 4), h = random_poly(rng, n, 4, 4);
    EXPECT_TRUE(bracket(f, f, B).is_zero());
    EXPECT_EQ(bracket(f, g, B), -bracket(g, f, B));
    EXPECT_EQ(bracket(f, g * h, B), bracket(f, g, B) * h + g * bracket(f, h, B));
    QPoly jac = bracket(f, bracket(g, h, B), B) + bracket(g, bracket(h, f, B), B) + bracket(h, bracket(f, g, B), B);
    EXPECT_TRUE(jac.is_zero());
  }
  // homogeneous degree drop by two
  auto B = darboux_bivector<Rational>(2);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly f(4), g(4);
    int p = 1 + static_cast<int>(rng() % 4), q = 1 + static_cast<int>(rng() % 4);
    for (const auto& m : monomials(4, p)) f.add_term(m, Rational(static_cast<long long>(rng() % 5) - 2));
    for (const auto& m : monomials(4, q)) g.add_term(m, Rational(static_cast<long long>(rng() % 5) - 2));
    QPoly b = bracket(f, g, B);
    if (!b.is_zero()) {
      EXPECT_TRUE(b.is_homogeneous());
      EXPECT_EQ(b.degree(), p + q - 2);
    }
  }
}

TEST(Poly, JacobiCheckOnBivectors) {
  EXPECT_TRUE(satisfies_jacobi(darboux_bivector<Rational>(2)));
  QPoly x = QPoly::var(3, 0), y = QPoly::var(3, 1), z = QPoly::var(3, 2);
  Bivector<Rational> so3(3);
  so3.set(0, 1, z);
  so3.set(1, 2, x);
  so3.set(2, 0, y);
  EXPECT_TRUE(satisfies_jacobi(so3));
  Bivector<Rational> broken(3);
  broken.set(0, 1, z);
  broken.set(1, 2, z);
  broken.set(2, 0, y);
  EXPECT_FALSE(satisfies_jacobi(broken));
}

TEST(Invariants, Examples) {
  auto Z2 = sl2_subgroup("cyclic", 2);
  auto b2 = invariant_basis(Z2, 2);
  std::vector<CPoly> want{cvar(2, 0) * cvar(2, 0), cvar(2, 0) * cvar(2, 1), cvar(2, 1) * cvar(2, 1)};
  EXPECT_EQ(b2, want);
  EXPECT_TRUE(invariant_basis(Z2, 3).empty());
  for (const MatrixGroup& G : {Z2, weyl_group('B', 2), sl2_subgroup("binary-dihedral", 3)}) {
    auto b0 = invariant_basis(G, 0);
    ASSERT_EQ(b0.size(), 1u);
    EXPECT_EQ(b0[0], CPoly::constant(G.dim(), CycloNum(1)));
  }
  auto S2 = symmetric_group(2);
  auto b1 = invariant_basis(S2, 1);
  std::vector<CPoly> want1{cvar(4, 0) + cvar(4, 1), cvar(4, 2) + cvar(4, 3)};
  EXPECT_EQ(b1, want1);
}

TEST(Invariants, MolienExamples) {
  auto m = molien(sl2_subgroup("cyclic", 2), 4);
  EXPECT_EQ(m, (std::vector<Rational>{1, 0, 3, 0, 5}));
  auto t = molien(sl2_subgroup("cyclic", 1), 6);
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(t[d], Rational(d + 1));
}

// Exact Reynolds over all elements, independent of the fixed-space lift.
TEST(Invariants, RationalPathMatchesReynolds) {
  for (const MatrixGroup& G : {weyl_group('A', 2), weyl_group('B', 2), weyl_group('G', 2)}) {
    InvariantRing R(G);
    EXPECT_FALSE(R.monomial_path());
    for (int d = 0; d <= 4; ++d) {
      std::vector<CPoly> avg;
      for (const auto& m : monomials(G.dim(), d)) {
        CPoly r = reynolds(G, CPoly::monomial(m));
        if (!r.is_zero()) avg.push_back(r);
      }
      EXPECT_EQ(R.basis(d), detail::canonical_span(avg, G.dim())) << d;
    }
  }
}

TEST(Invariants, MolienCrossOracle) {
  for (const MatrixGroup& G : {weyl_group('A', 2), weyl_group('B', 3), weyl_group('G', 2), sl2_subgroup("cyclic", 5),
                               sl2_subgroup("binary-dihedral", 4), symmetric_group(3)}) {
    InvariantRing R(G);
    auto mol = molien(G, 6);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(mol[d], Rational(static_cast<long long>(R.basis(d).size()))) << d;
  }
}

TEST(Invariants, ReynoldsIdempotentAndInvariant) {
  auto G = weyl_group('A', 2);
  InvariantRing R(G);
  for (const auto& f : R.basis(3)) {
    EXPECT_EQ(reynolds(G, f), f);
    for (auto g : G.generators()) EXPECT_EQ(substitute(G.element(g), f), f);
  }
}

TEST(Invariants, BracketClosure) {
  auto B = standard_bivector(sl2_subgroup("cyclic", 2).space().form);
  CPoly x = cvar(2, 0), y = cvar(2, 1);
  EXPECT_EQ(bracket(x * x, y * y, B), CycloNum(4) * (x * y));
  auto r = bracket_closure_check(sl2_subgroup("cyclic", 2), 6);
  EXPECT_TRUE(r.pass) << r.failure;
  auto s = bracket_closure_check(weyl_group('A', 2), 6);
  EXPECT_TRUE(s.pass) << s.failure;
  EXPECT_GT(s.brackets, 0u);
}
