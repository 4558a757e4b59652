#pragma once

#include "mckaykit/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace mckaykit {

struct StructureConstant {
  std::size_t i, j, k;
  Rational c;
};

struct GradedCenter {
  std::vector<int> degrees;                  // per class
  std::vector<StructureConstant> constants;  // surviving products, deg k = deg i + deg j
  std::vector<StructureConstant> dropped;    // lower-order mass removed by the filtration
  std::vector<long long> poincare;           // coefficient of t^d, d = 0..dim V
};

struct ReesTerm {
  std::size_t i, j, k;
  long long c;
  int u_power;
};

struct LemmaReport {
  bool pass = true;
  std::size_t pairs = 0;       // ordered pairs scanned
  std::size_t applicable = 0;  // pairs with V^g + V^h = V
  std::optional<std::pair<std::uint32_t, std::uint32_t>> counterexample;
};

// 3-index table c[i][j][k] of the class algebra, one pass over G per class.
using ClassAlgebra = std::vector<std::vector<std::vector<long long>>>;

inline ClassAlgebra class_algebra(const MatrixGroup& G) {
  std::size_t m = G.classes().size();
  ClassAlgebra c(m, std::vector<std::vector<long long>>(m, std::vector<long long>(m, 0)));
  for (std::size_t k = 0; k < m; ++k) {
    std::uint32_t z = G.classes()[k].rep;
    for (std::uint32_t x = 0; x < G.order(); ++x) {
      std::uint32_t y = G.mul(G.inverse(x), z);
      ++c[G.class_of(x)][G.class_of(y)][k];
    }
  }
  return c;
}

inline std::vector<std::size_t> symplectic_reflections(const MatrixGroup& G) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < G.classes().size(); ++c)
    if (G.classes()[c].degree == 2) out.push_back(c);
  return out;
}

inline std::vector<long long> orbifold_poincare(const MatrixGroup& G) {
  std::vector<long long> p(G.dim() + 1, 0);
  for (const auto& c : G.classes()) ++p[c.degree];
  return p;
}

inline GradedCenter gr_center(const MatrixGroup& G, const ClassAlgebra& alg) {
  GradedCenter gc;
  for (const auto& c : G.classes()) gc.degrees.push_back(c.degree);
  std::size_t m = gc.degrees.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        long long v = alg[i][j][k];
        if (v == 0) continue;
        StructureConstant sc{i, j, k, Rational(v)};
        if (gc.degrees[k] == gc.degrees[i] + gc.degrees[j])
          gc.constants.push_back(sc);
        else if (gc.degrees[k] > gc.degrees[i] + gc.degrees[j])
          throw std::logic_error("filtration violated: F_i F_j not inside F_{i+j}");
        else
          gc.dropped.push_back(sc);
      }
  gc.poincare.assign(G.dim() + 1, 0);
  for (int d : gc.degrees) ++gc.poincare[d];
  return gc;
}

inline GradedCenter gr_center(const MatrixGroup& G) { return gr_center(G, class_algebra(G)); }

inline std::vector<long long> betti_of_resolution(const GradedCenter& gc) { return gc.poincare; }

inline std::vector<ReesTerm> rees_center(const MatrixGroup& G, const ClassAlgebra& alg) {
  std::vector<ReesTerm> out;
  std::size_t m = G.classes().size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (alg[i][j][k] != 0) {
          int u = G.classes()[i].degree + G.classes()[j].degree - G.classes()[k].degree;
          out.push_back({i, j, k, alg[i][j][k], u});
        }
  return out;
}

namespace detail {

template <class T>
LemmaReport lemma_scan(const MatrixGroup& G) {
  auto elem = [&](std::uint32_t i) {
    if constexpr (std::is_same_v<T, Rational>)
      return G.element_q(i);
    else
      return G.element(i);
  };
  std::size_t n = G.dim(), N = G.order();
  std::vector<Matrix<T>> mats(N);
  std::vector<std::vector<std::vector<T>>> fixed(N);
  for (std::uint32_t g = 0; g < N; ++g) {
    mats[g] = elem(g);
    fixed[g] = fixed_space(mats[g]);
  }
  LemmaReport rep;
  for (std::uint32_t g = 0; g < N; ++g)
    for (std::uint32_t h = 0; h < N; ++h) {
      ++rep.pairs;
      std::size_t fg = fixed[g].size(), fh = fixed[h].size();
      if (fg + fh < n) continue;
      Matrix<T> M(n, fg + fh);
      for (std::size_t c = 0; c < fg; ++c)
        for (std::size_t r = 0; r < n; ++r) M(r, c) = fixed[g][c][r];
      for (std::size_t c = 0; c < fh; ++c)
        for (std::size_t r = 0; r < n; ++r) M(r, fg + c) = fixed[h][c][r];
      if (rank(M) != n) continue;
      ++rep.applicable;
      // V^g ∩ V^h lies in V^{gh}; equality holds iff V^{gh} is fixed by both.
      std::uint32_t gh = G.mul(g, h);
      bool ok = fixed[gh].size() + n == fg + fh;
      for (const auto& v : fixed[gh]) {
        if (!ok) break;
        ok = mats[g].apply(v) == v && mats[h].apply(v) == v;
      }
      if (!ok) {
        rep.pass = false;
        if (!rep.counterexample) rep.counterexample = std::make_pair(g, h);
      }
    }
  return rep;
}

}  // namespace detail

inline LemmaReport check_lemma_easy(const MatrixGroup& G) {
  if (G.conductor() == 1) return detail::lemma_scan<Rational>(G);
  return detail::lemma_scan<CycloNum>(G);
}

}  // namespace mckaykit
