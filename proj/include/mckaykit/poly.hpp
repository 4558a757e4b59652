#pragma once

#include "mckaykit/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace mckaykit {

using Mono = std::vector<std::uint16_t>;

inline int mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Graded lexicographic: lower degree first; within a degree x0^d comes first.
struct GrLex {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

// All monomials of total degree d in n variables, in GrLex order.
inline std::vector<Mono> monomials(std::size_t n, int d) {
  std::vector<Mono> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Mono m(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      m[i] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = static_cast<std::uint16_t>(e);
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

template <class T>
class Poly {
 public:
  using Terms = std::map<Mono, T, GrLex>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : n_(nvars) {}
  static Poly constant(std::size_t nvars, const T& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.t_[Mono(nvars, 0)] = c;
    return p;
  }
  static Poly var(std::size_t nvars, std::size_t i) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.t_[m] = T(1);
    return p;
  }
  static Poly monomial(const Mono& m, const T& c = T(1)) {
    Poly p(m.size());
    if (!c.is_zero()) p.t_[m] = c;
    return p;
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  T coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? T() : it->second;
  }
  // Highest total degree, -1 for the zero polynomial.
  int degree() const { return t_.empty() ? -1 : mono_degree(t_.rbegin()->first); }
  bool is_homogeneous() const { return t_.empty() || mono_degree(t_.begin()->first) == degree(); }

  void add_term(const Mono& m, const T& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly p(n_);
    for (const auto& [m, c] : t_) p.t_.emplace(m, -c);
    return p;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p(std::max(a.n_, b.n_));
    Mono m(p.n_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        for (std::size_t i = 0; i < p.n_; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
        p.add_term(m, ca * cb);
      }
    return p;
  }
  friend Poly operator*(const T& s, const Poly& a) {
    Poly p(a.n_);
    if (s.is_zero()) return p;
    for (const auto& [m, c] : a.t_) p.t_.emplace(m, s * c);
    return p;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  Poly derivative(std::size_t i) const {
    Poly p(n_);
    for (const auto& [m, c] : t_) {
      if (m[i] == 0) continue;
      Mono d = m;
      --d[i];
      p.t_.emplace(std::move(d), T(static_cast<int>(m[i])) * c);
    }
    return p;
  }

  Poly pow(int k) const {
    Poly r = constant(n_, T(1)), b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r = r * b;
      if (k > 1) b = b * b;
    }
    return r;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
      if (!s.empty()) s += " + ";
      std::string mono;
      for (std::size_t i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      std::string cs = c.str();
      if (mono.empty())
        s += cs;
      else if (cs == "1")
        s += mono;
      else
        s += "(" + cs + ")*" + mono;
    }
    return s;
  }

 private:
  std::size_t n_ = 0;
  Terms t_;
};

using CPoly = Poly<CycloNum>;
using QPoly = Poly<Rational>;

// Linear substitution x_i -> sum_j g_ij x_j.
template <class T>
Poly<T> substitute(const Matrix<T>& g, const Poly<T>& f) {
  std::size_t n = f.nvars();
  std::vector<Poly<T>> lin(n, Poly<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!g(i, j).is_zero()) lin[i].add_term([&] {
          Mono m(n, 0);
          m[j] = 1;
          return m;
        }(), g(i, j));
  std::vector<std::vector<Poly<T>>> powers(n);
  auto power = [&](std::size_t i, int e) -> const Poly<T>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly<T>::constant(n, T(1)));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * lin[i]);
    return pw[e];
  };
  Poly<T> out(n);
  for (const auto& [m, c] : f.terms()) {
    Poly<T> term = Poly<T>::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) term = term * power(i, m[i]);
    out += term;
  }
  return out;
}

// Skew matrix of polynomial coefficients theta_ij = {x_i, x_j}.
template <class T>
struct Bivector {
  std::size_t n = 0;
  std::vector<std::vector<Poly<T>>> theta;

  explicit Bivector(std::size_t nvars = 0) : n(nvars), theta(nvars, std::vector<Poly<T>>(nvars, Poly<T>(nvars))) {}

  void set(std::size_t i, std::size_t j, const Poly<T>& p) {
    theta[i][j] = p;
    theta[j][i] = -p;
  }
  bool is_zero() const {
    for (const auto& row : theta)
      for (const auto& p : row)
        if (!p.is_zero()) return false;
    return true;
  }
};

// {x_i, x_j} = theta_ij with theta = -J^{-1}, so that g theta g^T = theta for g in Sp(J).
template <class T>
Bivector<T> standard_bivector(const Matrix<T>& J) {
  std::size_t n = J.rows();
  Matrix<T> th = inverse(J);
  Bivector<T> B(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B.theta[i][j] = Poly<T>::constant(n, -th(i, j));
  return B;
}

// Darboux bivector on C^{2h}: {x_i, x_{h+i}} = 1.
template <class T>
Bivector<T> darboux_bivector(std::size_t half) {
  Bivector<T> B(2 * half);
  for (std::size_t i = 0; i < half; ++i) B.set(i, half + i, Poly<T>::constant(2 * half, T(1)));
  return B;
}

template <class T>
Poly<T> bracket(const Poly<T>& f, const Poly<T>& g, const Bivector<T>& B) {
  std::size_t n = B.n;
  Poly<T> out(n);
  if (f.is_zero() || g.is_zero()) return out;
  std::vector<Poly<T>> df(n), dg(n);
  for (std::size_t i = 0; i < n; ++i) {
    df[i] = f.derivative(i);
    dg[i] = g.derivative(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (df[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!B.theta[i][j].is_zero() && !dg[j].is_zero()) out += B.theta[i][j] * df[i] * dg[j];
  }
  return out;
}

// Jacobi on coordinate triples, which suffices by the Leibniz rule.
template <class T>
bool satisfies_jacobi(const Bivector<T>& B) {
  std::size_t n = B.n;
  std::vector<Poly<T>> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(Poly<T>::var(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Poly<T> s = bracket(x[i], B.theta[j][k], B) + bracket(x[j], B.theta[k][i], B) + bracket(x[k], B.theta[i][j], B);
        if (!s.is_zero()) return false;
      }
  return true;
}

}  // namespace mckaykit
