#pragma once

#include "mckaykit/group.hpp"

#include <stdexcept>
#include <vector>

namespace mckaykit {

namespace detail {

// Power series of 1/det(1 - t g) to order D from the characteristic polynomial of g.
template <class T>
std::vector<T> inverse_det_series(const Matrix<T>& g, std::size_t D) {
  std::vector<T> cp = charpoly(g);  // det(tI - g), low degree first
  std::size_t n = g.rows();
  std::vector<T> q(n + 1);          // det(1 - t g) = t^n cp(1/t)
  for (std::size_t i = 0; i <= n; ++i) q[i] = cp[n - i];
  std::vector<T> s(D + 1);
  s[0] = T(1);
  for (std::size_t d = 1; d <= D; ++d) {
    T acc;
    for (std::size_t i = 1; i <= std::min(d, n); ++i) acc -= q[i] * s[d - i];
    s[d] = acc;
  }
  return s;
}

template <class T>
Matrix<T> leading_block(const Matrix<T>& g, std::size_t k) {
  Matrix<T> b(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = g(i, j);
  return b;
}

}  // namespace detail

// Coefficients c_0..c_D of (1/|G|) sum_g 1/det(1 - t g), restricted to the leading k x k block when k > 0.
inline std::vector<Rational> molien(const MatrixGroup& G, std::size_t D, std::size_t block = 0) {
  std::size_t k = block == 0 ? G.dim() : block;
  std::vector<Rational> out(D + 1);
  if (G.conductor() == 1) {
    for (const auto& c : G.classes()) {
      auto s = detail::inverse_det_series(detail::leading_block(G.element_q(c.rep), k), D);
      Rational w(static_cast<long long>(c.size()));
      for (std::size_t d = 0; d <= D; ++d) out[d] += w * s[d];
    }
  } else {
    std::vector<CycloNum> acc(D + 1);
    for (const auto& c : G.classes()) {
      auto s = detail::inverse_det_series(detail::leading_block(G.element(c.rep), k), D);
      CycloNum w(static_cast<int>(c.size()));
      for (std::size_t d = 0; d <= D; ++d) acc[d] += w * s[d];
    }
    for (std::size_t d = 0; d <= D; ++d) {
      if (!acc[d].is_rational()) throw std::logic_error("Molien coefficient is not rational");
      out[d] = acc[d].rational_part();
    }
  }
  Rational inv_order(1, static_cast<long long>(G.order()));
  for (auto& x : out) x *= inv_order;
  return out;
}

// Degrees d_i with series = prod 1/(1 - t^{d_i}), found greedily; throws if the series is not of that form.
inline std::vector<int> free_degrees(const std::vector<Rational>& series, std::size_t count) {
  std::vector<Rational> p(series.size());
  p[0] = Rational(1);
  std::vector<int> degs;
  for (std::size_t d = 1; d < series.size() && degs.size() < count; ++d) {
    Rational diff = series[d] - p[d];
    if (diff.sign() < 0 || !diff.is_integer()) throw std::runtime_error("series is not a product of 1/(1-t^d)");
    for (long long r = 0; r < diff.small_num(); ++r) {
      degs.push_back(static_cast<int>(d));
      for (std::size_t e = d; e < p.size(); ++e) p[e] += p[e - d];
    }
  }
  if (degs.size() != count || p != series) throw std::runtime_error("series is not a product of 1/(1-t^d)");
  return degs;
}

}  // namespace mckaykit
