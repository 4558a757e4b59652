#include "mckaykit/catalog.hpp"
#include "mckaykit/mckay.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace mckaykit;

namespace {

// Bourbaki exponent tables, used only as an oracle.
std::vector<int> table_exponents(char t, int r) {
  std::vector<int> e;
  switch (t) {
    case 'A':
      for (int i = 1; i <= r; ++i) e.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= r; ++i) e.push_back(2 * i - 1);
      break;
    case 'D':
      for (int i = 1; i < r; ++i) e.push_back(2 * i - 1);
      e.push_back(r - 1);
      break;
    case 'E':
      if (r == 6) e = {1, 4, 5, 7, 8, 11};
      if (r == 7) e = {1, 5, 7, 9, 11, 13, 17};
      break;
    case 'F': e = {1, 5, 7, 11}; break;
    case 'G': e = {1, 5}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST(Catalog, CartanMatrices) {
  auto g2 = root_system('G', 2);
  EXPECT_EQ(g2.cartan, (std::vector<std::vector<long long>>{{2, -3}, {-1, 2}}));
  auto b2 = root_system('B', 2);
  EXPECT_EQ(b2.cartan, (std::vector<std::vector<long long>>{{2, -1}, {-2, 2}}));
  auto e6 = root_system('E', 6);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(e6.cartan[i][i], 2);
  // simply laced: symmetric Cartan matrix
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(e6.cartan[i][j], e6.cartan[j][i]);
  EXPECT_THROW(root_system('D', 3), std::invalid_argument);
  EXPECT_THROW(root_system('E', 9), std::invalid_argument);
}

TEST(Catalog, WeylExamples) {
  auto a1 = weyl_group('A', 1);
  EXPECT_EQ(a1.order(), 2u);
  EXPECT_EQ(a1.dim(), 2u);
  EXPECT_EQ(weyl_group('B', 2).dim(), 4u);
  auto g2 = weyl_group('G', 2);
  EXPECT_EQ(g2.order(), 12u);
  EXPECT_EQ(symplectic_reflections(g2).size(), 2u);
}

TEST(Catalog, WeylOrdersMatchFormula) {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}})
    EXPECT_EQ(weyl_group(t, r).order(), weyl_order_formula(t, r)) << t << r;
}

TEST(Catalog, SL2Examples) {
  auto c4 = sl2_subgroup("cyclic", 4);
  EXPECT_EQ(c4.order(), 4u);
  EXPECT_EQ(symplectic_reflections(c4).size(), 3u);
  auto q8 = sl2_subgroup("binary-dihedral", 2);
  EXPECT_EQ(q8.order(), 8u);
  // quaternion group: one element of order 2, five classes of sizes 1,1,2,2,2
  std::size_t involutions = 0;
  for (std::uint32_t g = 0; g < q8.order(); ++g)
    if (g != q8.identity() && q8.mul(g, g) == q8.identity()) ++involutions;
  EXPECT_EQ(involutions, 1u);
  EXPECT_EQ(q8.classes().size(), 5u);
  EXPECT_EQ(sl2_subgroup("cyclic", 1).order(), 1u);
  EXPECT_THROW(sl2_subgroup("icosahedral", 1), std::invalid_argument);
}

TEST(Catalog, Exponents) {
  EXPECT_EQ(exponents('A', 2), (std::vector<int>{1, 2}));
  EXPECT_EQ(exponents('B', 2), (std::vector<int>{1, 3}));
  EXPECT_EQ(exponents('A', 1), (std::vector<int>{1}));
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    auto e = exponents(t, r);
    EXPECT_EQ(e, table_exponents(t, r)) << t << r;
    unsigned long long prod = 1;
    for (int m : e) prod *= static_cast<unsigned long long>(m + 1);
    EXPECT_EQ(prod, weyl_order_formula(t, r));
  }
}

TEST(Catalog, ResolutionExists) {
  EXPECT_TRUE(root_system('A', 3).resolution_exists);
  EXPECT_TRUE(root_system('C', 2).resolution_exists);
  EXPECT_FALSE(root_system('G', 2).resolution_exists);
  EXPECT_FALSE(root_system('D', 4).resolution_exists);
  EXPECT_FALSE(root_system('F', 4).resolution_exists);
}

TEST(Catalog, ReflectionClassesPerType) {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 4}, {'D', 4}, {'B', 2}, {'C', 3}, {'G', 2}}) {
    std::size_t want = (t == 'A' || t == 'D' || t == 'E') ? 1 : 2;
    EXPECT_EQ(symplectic_reflections(weyl_group(t, r)).size(), want) << t << r;
  }
}

TEST(Catalog, Specs) {
  EXPECT_EQ(known_order("cyclic:7"), 7u);
  EXPECT_EQ(known_order("binary-dihedral:3"), 12u);
  EXPECT_EQ(known_order("weyl:E6"), 51840u);
  EXPECT_EQ(known_order("symmetric:4"), 24u);
  auto small = catalog_specs(500);
  for (const auto& s : small) EXPECT_LE(known_order(s), 500u);
  EXPECT_NE(std::find(small.begin(), small.end(), "weyl:B4"), small.end());
  EXPECT_EQ(std::find(small.begin(), small.end(), "weyl:F4"), small.end());
}

TEST(Catalog, DirectProduct) {
  auto p = direct_product(sl2_subgroup("cyclic", 2), weyl_group('A', 2));
  EXPECT_EQ(p.order(), 12u);
  EXPECT_EQ(p.dim(), 6u);
  EXPECT_EQ(p.classes().size(), 6u);
}
