#pragma once

#include "mckaykit/poly.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

namespace mckaykit {

struct JacobiViolated : std::invalid_argument {
  JacobiViolated() : std::invalid_argument("bivector does not satisfy the Jacobi identity") {}
};

// Polyvector field of arity k: sum over k-subsets S of coefficient * d_{S_1} ^ ... ^ d_{S_k}.
// Coordinates of Lambda^k T are indexed by bitmasks, so antisymmetry is structural.
template <class T>
class Polyvector {
 public:
  using Mask = std::uint32_t;

  Polyvector() = default;
  Polyvector(std::size_t nvars, int arity) : n_(nvars), k_(arity) {
    if (nvars > 31) throw std::invalid_argument("too many variables for a polyvector");
  }

  static Polyvector function(const Poly<T>& f) {
    Polyvector p(f.nvars(), 0);
    p.add(0, f);
    return p;
  }
  static Polyvector vector_field(const std::vector<Poly<T>>& comps) {
    Polyvector p(comps.size(), 1);
    for (std::size_t i = 0; i < comps.size(); ++i) p.add(Mask(1) << i, comps[i]);
    return p;
  }
  static Polyvector from_bivector(const Bivector<T>& B) {
    Polyvector p(B.n, 2);
    for (std::size_t i = 0; i < B.n; ++i)
      for (std::size_t j = i + 1; j < B.n; ++j) p.add((Mask(1) << i) | (Mask(1) << j), B.theta[i][j]);
    return p;
  }

  std::size_t nvars() const { return n_; }
  int arity() const { return k_; }
  const std::map<Mask, Poly<T>>& coeffs() const { return c_; }
  Poly<T> coeff(Mask S) const {
    auto it = c_.find(S);
    return it == c_.end() ? Poly<T>(n_) : it->second;
  }
  bool is_zero() const { return c_.empty(); }

  void add(Mask S, const Poly<T>& f) {
    if (std::popcount(S) != k_) throw std::invalid_argument("subset size does not match arity");
    if (f.is_zero()) return;
    auto [it, fresh] = c_.emplace(S, f);
    if (!fresh) {
      it->second += f;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  Polyvector& operator+=(const Polyvector& o) {
    for (const auto& [S, f] : o.c_) add(S, f);
    return *this;
  }
  friend Polyvector operator+(Polyvector a, const Polyvector& b) { return a += b; }
  friend Polyvector operator-(Polyvector a, const Polyvector& b) {
    for (const auto& [S, f] : b.c_) a.add(S, -f);
    return a;
  }
  friend Polyvector operator*(const T& s, const Polyvector& a) {
    Polyvector p(a.n_, a.k_);
    for (const auto& [S, f] : a.c_) p.add(S, s * f);
    return p;
  }
  friend bool operator==(const Polyvector& a, const Polyvector& b) { return a.k_ == b.k_ && a.c_ == b.c_; }

 private:
  std::size_t n_ = 0;
  int k_ = 0;
  std::map<Mask, Poly<T>> c_;
};

namespace detail {

using Mask = std::uint32_t;

inline int bits_below(Mask S, std::size_t i) { return std::popcount(S & ((Mask(1) << i) - 1)); }
inline int bits_above(Mask S, std::size_t i) { return std::popcount(S >> (i + 1)); }

// xi_S * xi_T in the exterior algebra: sign of sorting the concatenation.
inline int wedge_sign(Mask S, Mask T) {
  int inv = 0;
  for (Mask t = T; t; t &= t - 1) inv += bits_above(S, static_cast<std::size_t>(std::countr_zero(t)));
  return inv % 2 ? -1 : 1;
}

template <class T>
void wedge_acc(Polyvector<T>& out, Mask S, const Poly<T>& f, Mask U, const Poly<T>& g, int sign) {
  if (S & U) return;
  Poly<T> prod = f * g;
  if (prod.is_zero()) return;
  if (sign * wedge_sign(S, U) < 0) prod = -prod;
  out.add(S | U, prod);
}

}  // namespace detail

// [P,Q] = sum_i (P d/dxi_i from the right)(d/dx_i Q) - (d/dx_i P)(d/dxi_i Q from the left).
// For vector fields this is the Lie bracket and [X, f] = X(f).
template <class T>
Polyvector<T> schouten_bracket(const Polyvector<T>& P, const Polyvector<T>& Q) {
  std::size_t n = std::max(P.nvars(), Q.nvars());
  int arity = P.arity() + Q.arity() - 1;
  Polyvector<T> out(n, std::max(arity, 0));
  if (arity < 0) return out;
  for (std::size_t i = 0; i < n; ++i) {
    detail::Mask bit = detail::Mask(1) << i;
    for (const auto& [S, f] : P.coeffs())
      for (const auto& [U, g] : Q.coeffs()) {
        if (S & bit) {
          int rs = detail::bits_above(S, i) % 2 ? -1 : 1;
          detail::wedge_acc(out, S & ~bit, f, U, g.derivative(i), rs);
        }
        if (U & bit) {
          int ls = detail::bits_below(U, i) % 2 ? -1 : 1;
          detail::wedge_acc(out, S, f.derivative(i), U & ~bit, g, -ls);
        }
      }
  }
  return out;
}

template <class T>
Polyvector<T> kb_differential(const Polyvector<T>& P, const Bivector<T>& B) {
  if (!satisfies_jacobi(B)) throw JacobiViolated();
  return schouten_bracket(Polyvector<T>::from_bivector(B), P);
}

struct GradedDim {
  int degree = 0;
  long long dim = 0;
  bool certified = false;
};

namespace detail {

inline std::vector<Mask> subsets(std::size_t n, int k) {
  std::vector<Mask> out;
  for (Mask S = 0; S < (Mask(1) << n); ++S)
    if (std::popcount(S) == k) out.push_back(S);
  return out;
}

// Common coefficient degree of a homogeneous bivector; -1 for the zero bivector.
template <class T>
int bivector_degree(const Bivector<T>& B) {
  int deg = -1;
  for (std::size_t i = 0; i < B.n; ++i)
    for (std::size_t j = 0; j < B.n; ++j) {
      const auto& p = B.theta[i][j];
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || (deg >= 0 && deg != p.degree()))
        throw std::invalid_argument("hp_smooth needs a homogeneous bivector");
      deg = p.degree();
    }
  return deg;
}

// Matrix of P -> [Theta, P] from arity k, coefficient degree q to arity k+1, degree q + t - 1.
template <class T>
Matrix<T> kb_matrix(const Polyvector<T>& Theta, std::size_t n, int k, int q, int t) {
  auto src_s = subsets(n, k), dst_s = subsets(n, k + 1);
  auto src_m = q >= 0 ? monomials(n, q) : std::vector<Mono>{};
  int q2 = q + t - 1;
  auto dst_m = q2 >= 0 ? monomials(n, q2) : std::vector<Mono>{};
  std::map<std::pair<Mask, Mono>, std::size_t> row;
  for (auto S : dst_s)
    for (const auto& m : dst_m) row.emplace(std::make_pair(S, m), row.size());
  Matrix<T> M(row.size(), src_s.size() * src_m.size());
  std::size_t c = 0;
  for (auto S : src_s)
    for (const auto& m : src_m) {
      Polyvector<T> P(n, k);
      P.add(S, Poly<T>::monomial(m));
      auto dP = schouten_bracket(Theta, P);
      for (const auto& [U, f] : dP.coeffs())
        for (const auto& [mm, x] : f.terms()) M(row.at({U, mm}), c) = x;
      ++c;
    }
  return M;
}

}  // namespace detail

// dim HP^k per coefficient degree q <= window; degrees above window - 2 are reported uncertified.
template <class T>
std::vector<GradedDim> hp_smooth(const Bivector<T>& B, int k, int window) {
  if (!satisfies_jacobi(B)) throw JacobiViolated();
  std::size_t n = B.n;
  int t = detail::bivector_degree(B);
  auto Theta = Polyvector<T>::from_bivector(B);
  std::vector<GradedDim> out;
  for (int q = 0; q <= window; ++q) {
    long long cells = static_cast<long long>(detail::subsets(n, k).size() * monomials(n, q).size());
    long long dim = cells;
    if (t >= 0 && k >= 0) {
      if (k + 1 <= static_cast<int>(n)) dim -= static_cast<long long>(rank(detail::kb_matrix(Theta, n, k, q, t)));
      if (k >= 1 && q - t + 1 >= 0)
        dim -= static_cast<long long>(rank(detail::kb_matrix(Theta, n, k - 1, q - t + 1, t)));
    }
    out.push_back({q, dim, q <= window - 2});
  }
  return out;
}

}  // namespace mckaykit
