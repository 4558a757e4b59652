#pragma once

#include "mckaykit/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mckaykit {

inline std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Finite-dimensional algebra over Q given by structure constants e_i e_j = sum_k c[i][j][k] e_k.
class FinAlgebra {
 public:
  FinAlgebra() = default;
  FinAlgebra(std::size_t n, std::vector<Rational> c, std::vector<Rational> unit, bool check = true)
      : n_(n), c_(std::move(c)), unit_(std::move(unit)) {
    if (c_.size() != n_ * n_ * n_ || unit_.size() != n_) throw std::invalid_argument("structure constant size mismatch");
    if (check) {
      if (!is_commutative() || !is_associative()) throw std::invalid_argument("algebra is not commutative and associative");
      for (std::size_t i = 0; i < n_; ++i) {
        std::vector<Rational> e(n_);
        e[i] = Rational(1);
        if (mul(unit_, e) != e) throw std::invalid_argument("unit axiom fails");
      }
    }
  }

  std::size_t dim() const { return n_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  const std::vector<Rational>& constants() const { return c_; }
  const std::vector<Rational>& unit() const { return unit_; }

  std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (b[j].is_zero()) continue;
        Rational ab = a[i] * b[j];
        for (std::size_t k = 0; k < n_; ++k)
          if (!c(i, j, k).is_zero()) out[k] += ab * c(i, j, k);
      }
    }
    return out;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (c(i, j, k) != c(j, i, k)) return false;
    return true;
  }
  bool is_associative() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          for (std::size_t l = 0; l < n_; ++l) {
            Rational lhs, rhs;
            for (std::size_t t = 0; t < n_; ++t) {
              lhs += c(i, j, t) * c(t, k, l);
              rhs += c(j, k, t) * c(i, t, l);
            }
            if (lhs != rhs) return false;
          }
    return true;
  }

  // Q[x]/(x^m) with basis 1, x, ..., x^{m-1}.
  static FinAlgebra truncated_polynomial(std::size_t m) {
    std::vector<Rational> c(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; i + j < m; ++j) c[(i * m + j) * m + i + j] = Rational(1);
    std::vector<Rational> u(m);
    u[0] = Rational(1);
    return FinAlgebra(m, std::move(c), std::move(u));
  }

  // Basis (a, b) -> index a * dim B + b.
  static FinAlgebra tensor(const FinAlgebra& A, const FinAlgebra& B) {
    std::size_t na = A.dim(), nb = B.dim(), n = na * nb;
    std::vector<Rational> c(n * n * n);
    for (std::size_t a1 = 0; a1 < na; ++a1)
      for (std::size_t b1 = 0; b1 < nb; ++b1)
        for (std::size_t a2 = 0; a2 < na; ++a2)
          for (std::size_t b2 = 0; b2 < nb; ++b2)
            for (std::size_t a3 = 0; a3 < na; ++a3) {
              if (A.c(a1, a2, a3).is_zero()) continue;
              for (std::size_t b3 = 0; b3 < nb; ++b3)
                if (!B.c(b1, b2, b3).is_zero())
                  c[((a1 * nb + b1) * n + a2 * nb + b2) * n + a3 * nb + b3] = A.c(a1, a2, a3) * B.c(b1, b2, b3);
            }
    std::vector<Rational> u(n);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b) u[a * nb + b] = A.unit()[a] * B.unit()[b];
    return FinAlgebra(n, std::move(c), std::move(u), false);
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> c_;
  std::vector<Rational> unit_;
};

// Linear map A^{(x)k} -> A; entry (i_1..i_k, o) at index (sum i_j n^{k-j}) * n + o.
struct Cochain {
  std::size_t n = 0;
  int k = 0;
  std::vector<Rational> data;

  Cochain() = default;
  Cochain(std::size_t dim, int arity) : n(dim), k(arity), data(ipow(dim, arity) * dim) {}

  static Cochain multiplication(const FinAlgebra& A) {
    Cochain m(A.dim(), 2);
    m.data = A.constants();
    return m;
  }

  Rational& at(std::size_t in, std::size_t out) { return data[in * n + out]; }
  const Rational& at(std::size_t in, std::size_t out) const { return data[in * n + out]; }
  bool is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Rational& r) { return r.is_zero(); });
  }
  friend bool operator==(const Cochain& a, const Cochain& b) { return a.k == b.k && a.data == b.data; }
  Cochain& operator+=(const Cochain& o) {
    if (o.n != n || o.k != k) throw std::invalid_argument("adding cochains of different shape");
    for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
    return *this;
  }
  Cochain& operator*=(const Rational& s) {
    for (auto& x : data) x *= s;
    return *this;
  }
};

// Vanishes whenever an input equals the unit (basis element unit_index).
inline bool is_reduced(const Cochain& f, std::size_t unit_index) {
  std::size_t N = ipow(f.n, f.k);
  for (std::size_t in = 0; in < N; ++in) {
    bool hits = false;
    for (std::size_t r = in, j = 0; j < static_cast<std::size_t>(f.k); ++j, r /= f.n) hits |= (r % f.n == unit_index);
    if (!hits) continue;
    for (std::size_t o = 0; o < f.n; ++o)
      if (!f.at(in, o).is_zero()) return false;
  }
  return true;
}

namespace detail {

inline std::vector<std::size_t> digits(std::size_t idx, std::size_t n, int k) {
  std::vector<std::size_t> d(k);
  for (int j = k - 1; j >= 0; --j) {
    d[j] = idx % n;
    idx /= n;
  }
  return d;
}

inline std::size_t undigits(const std::vector<std::size_t>& d, std::size_t n) {
  std::size_t idx = 0;
  for (auto x : d) idx = idx * n + x;
  return idx;
}

}  // namespace detail

// (f o_i g)(a_1..a_{k+l-1}) = f(a_1..a_i, g(a_{i+1}..a_{i+l}), ...), with 0-based slot i.
inline Cochain compose_at(const Cochain& f, const Cochain& g, int i) {
  std::size_t n = f.n;
  int k = f.k, l = g.k, arity = k + l - 1;
  Cochain out(n, arity);
  std::size_t N = ipow(n, arity);
  std::vector<std::size_t> fin(k);
  for (std::size_t in = 0; in < N; ++in) {
    auto a = detail::digits(in, n, arity);
    std::vector<std::size_t> ga(a.begin() + i, a.begin() + i + l);
    std::size_t gidx = detail::undigits(ga, n);
    for (int j = 0; j < i; ++j) fin[j] = a[j];
    for (int j = i + 1; j < k; ++j) fin[j] = a[j + l - 1];
    for (std::size_t t = 0; t < n; ++t) {
      const Rational& gv = g.at(gidx, t);
      if (gv.is_zero()) continue;
      fin[i] = t;
      std::size_t fidx = detail::undigits(fin, n);
      for (std::size_t o = 0; o < n; ++o)
        if (!f.at(fidx, o).is_zero()) out.at(in, o) += gv * f.at(fidx, o);
    }
  }
  return out;
}

inline Cochain gerstenhaber_compose(const Cochain& f, const Cochain& g) {
  Cochain out(f.n, std::max(f.k + g.k - 1, 0));
  if (f.k == 0) return out;
  for (int i = 0; i < f.k; ++i) {
    Cochain c = compose_at(f, g, i);
    if ((i * (g.k - 1)) % 2 != 0) c *= Rational(-1);
    out += c;
  }
  return out;
}

// [f,g] = f o g - (-1)^{(k-1)(l-1)} g o f.
inline Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g) {
  if (f.n != g.n) throw std::invalid_argument("cochains over different algebras");
  if (f.k + g.k == 0) return Cochain(f.n, 0);
  Cochain out = gerstenhaber_compose(f, g);
  Cochain back = gerstenhaber_compose(g, f);
  if (((f.k - 1) * (g.k - 1)) % 2 == 0) back *= Rational(-1);
  out += back;
  return out;
}

// Component of a cochain on A (x) B with p inputs from A and q from B, output in A (x) B.
// Entry (a_1..a_p, b_1..b_q, o) at index ((a-index) * nb^q + b-index) * (na nb) + o.
struct BiCochain {
  std::size_t na = 0, nb = 0;
  int p = 0, q = 0;
  std::vector<Rational> data;

  BiCochain() = default;
  BiCochain(std::size_t na_, std::size_t nb_, int p_, int q_)
      : na(na_), nb(nb_), p(p_), q(q_), data(ipow(na_, p_) * ipow(nb_, q_) * na_ * nb_) {}
  std::size_t index(std::size_t ai, std::size_t bi, std::size_t o) const { return (ai * ipow(nb, q) + bi) * na * nb + o; }
  friend bool operator==(const BiCochain& x, const BiCochain& y) { return x.p == y.p && x.q == y.q && x.data == y.data; }
  BiCochain& operator+=(const BiCochain& o) {
    for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
    return *this;
  }
  BiCochain& operator*=(const Rational& s) {
    for (auto& x : data) x *= s;
    return *this;
  }
  bool is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Rational& r) { return r.is_zero(); });
  }
};

// sh(f)(a_1..a_p; b_1..b_q) = sum over (p,q)-shuffles of sign * f(interleaving), a as a(x)1, b as 1(x)b.
inline BiCochain shuffle_map(const Cochain& f, const FinAlgebra& A, const FinAlgebra& B, int p, int q,
                             std::size_t unitA, std::size_t unitB) {
  std::size_t na = A.dim(), nb = B.dim();
  if (f.k != p + q || f.n != na * nb) throw std::invalid_argument("shuffle arity mismatch");
  BiCochain out(na, nb, p, q);
  std::size_t NA = ipow(na, p), NB = ipow(nb, q), no = na * nb;
  // positions of the a's in the interleaving, as increasing sequences
  std::vector<std::vector<int>> shuffles;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      shuffles.push_back(cur);
      return;
    }
    for (int s = start; s < p + q; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<std::size_t> word(p + q);
  for (const auto& pos : shuffles) {
    int e = 0;
    for (int s = 0; s < p; ++s) e += pos[s] - s;
    Rational sign(e % 2 ? -1 : 1);
    std::vector<bool> is_a(p + q, false);
    for (int s : pos) is_a[s] = true;
    for (std::size_t ai = 0; ai < NA; ++ai) {
      auto a = detail::digits(ai, na, p);
      for (std::size_t bi = 0; bi < NB; ++bi) {
        auto b = detail::digits(bi, nb, q);
        int ia = 0, ib = 0;
        for (int s = 0; s < p + q; ++s) word[s] = is_a[s] ? a[ia++] * nb + unitB : unitA * nb + b[ib++];
        std::size_t fidx = detail::undigits(word, no);
        for (std::size_t o = 0; o < no; ++o)
          if (!f.at(fidx, o).is_zero()) out.data[out.index(ai, bi, o)] += sign * f.at(fidx, o);
      }
    }
  }
  return out;
}

// kappa_A(w)(a_1(x)b_1, ..., a_k(x)b_k) = w(a_1..a_k) (x) b_1...b_k.
inline Cochain kappa_A(const Cochain& w, const FinAlgebra& B, std::size_t unitB) {
  std::size_t na = w.n, nb = B.dim(), n = na * nb;
  Cochain out(n, w.k);
  std::size_t N = ipow(n, w.k);
  for (std::size_t in = 0; in < N; ++in) {
    auto d = detail::digits(in, n, w.k);
    std::vector<std::size_t> a(w.k);
    std::vector<Rational> prod(nb);
    prod[unitB] = Rational(1);
    for (int j = 0; j < w.k; ++j) {
      a[j] = d[j] / nb;
      std::vector<Rational> e(nb);
      e[d[j] % nb] = Rational(1);
      prod = B.mul(prod, e);
    }
    std::size_t widx = detail::undigits(a, na);
    for (std::size_t ao = 0; ao < na; ++ao) {
      if (w.at(widx, ao).is_zero()) continue;
      for (std::size_t bo = 0; bo < nb; ++bo)
        if (!prod[bo].is_zero()) out.at(in, ao * nb + bo) += w.at(widx, ao) * prod[bo];
    }
  }
  return out;
}

// Gerstenhaber bracket of a cochain w on A with the A-slots of h; the B-inputs and the B-part of
// outputs are carried along.
inline BiCochain bracket_A(const Cochain& w, const BiCochain& h) {
  std::size_t na = h.na, nb = h.nb, no = na * nb;
  int k = w.k, p = h.p, q = h.q, P = p + k - 1;
  BiCochain out(na, nb, std::max(P, 0), q);
  if (P < 0) return out;
  std::size_t NA = ipow(na, P), NB = ipow(nb, q);
  for (std::size_t ai = 0; ai < NA; ++ai) {
    auto a = detail::digits(ai, na, P);
    for (std::size_t bi = 0; bi < NB; ++bi) {
      // w o_i h, sign (-1)^{i(p-1)}
      for (int i = 0; i < k; ++i) {
        Rational sign(((i * (p - 1)) % 2) ? -1 : 1);
        std::vector<std::size_t> hin(a.begin() + i, a.begin() + i + p);
        std::size_t hidx = detail::undigits(hin, na);
        std::vector<std::size_t> win(k);
        for (int j = 0; j < i; ++j) win[j] = a[j];
        for (int j = i + 1; j < k; ++j) win[j] = a[j + p - 1];
        for (std::size_t t = 0; t < no; ++t) {
          const Rational& hv = h.data[h.index(hidx, bi, t)];
          if (hv.is_zero()) continue;
          win[i] = t / nb;
          std::size_t widx = detail::undigits(win, na);
          for (std::size_t ao = 0; ao < na; ++ao)
            if (!w.at(widx, ao).is_zero()) out.data[out.index(ai, bi, ao * nb + t % nb)] += sign * hv * w.at(widx, ao);
        }
      }
      // - (-1)^{(k-1)(p-1)} h o_i w, sign (-1)^{i(k-1)}
      int outer = ((k - 1) * (p - 1)) % 2 ? 1 : -1;
      for (int i = 0; i < p; ++i) {
        Rational sign(outer * (((i * (k - 1)) % 2) ? -1 : 1));
        std::vector<std::size_t> win(a.begin() + i, a.begin() + i + k);
        std::size_t widx = detail::undigits(win, na);
        std::vector<std::size_t> hin(p);
        for (int j = 0; j < i; ++j) hin[j] = a[j];
        for (int j = i + 1; j < p; ++j) hin[j] = a[j + k - 1];
        for (std::size_t t = 0; t < na; ++t) {
          const Rational& wv = w.at(widx, t);
          if (wv.is_zero()) continue;
          hin[i] = t;
          std::size_t hidx = detail::undigits(hin, na);
          for (std::size_t o = 0; o < no; ++o) {
            const Rational& hv = h.data[h.index(hidx, bi, o)];
            if (!hv.is_zero()) out.data[out.index(ai, bi, o)] += sign * wv * hv;
          }
        }
      }
    }
  }
  return out;
}

// Exchange the roles of A and B: inputs (b; a), outputs b (x) a.
inline BiCochain swap_factors(const BiCochain& h) {
  BiCochain out(h.nb, h.na, h.q, h.p);
  std::size_t NA = ipow(h.na, h.p), NB = ipow(h.nb, h.q);
  for (std::size_t ai = 0; ai < NA; ++ai)
    for (std::size_t bi = 0; bi < NB; ++bi)
      for (std::size_t ao = 0; ao < h.na; ++ao)
        for (std::size_t bo = 0; bo < h.nb; ++bo)
          out.data[out.index(bi, ai, bo * h.na + ao)] = h.data[h.index(ai, bi, ao * h.nb + bo)];
  return out;
}

inline BiCochain bracket_B(const Cochain& w, const BiCochain& h) { return swap_factors(bracket_A(w, swap_factors(h))); }

}  // namespace mckaykit
