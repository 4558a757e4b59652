#pragma once

#include "mckaykit/invariants.hpp"
#include "mckaykit/sparse.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckaykit {

// Graded pieces A_0..A_D of a graded Poisson algebra with bracket of degree -2, as explicit tables.
class TruncatedGradedAlgebra {
 public:
  TruncatedGradedAlgebra() = default;

  int window() const { return window_; }
  std::size_t size() const { return degree_.size(); }
  int degree(std::size_t i) const { return degree_[i]; }
  const std::vector<std::size_t>& of_degree(int d) const {
    static const std::vector<std::size_t> none;
    return d >= 0 && d <= window_ ? of_degree_[d] : none;
  }
  std::size_t dim(int d) const { return of_degree(d).size(); }
  const QPoly& element(std::size_t i) const { return basis_[i]; }
  // Largest degree below the window that needs a new algebra generator.
  int max_generator_degree() const { return max_gen_; }

  // e_i e_j, defined when the product degree is at most the window.
  const SparseVec* mul(std::size_t i, std::size_t j) const {
    return degree_[i] + degree_[j] <= window_ ? &mul_[i * size() + j] : nullptr;
  }
  // {e_i, e_j}, defined when deg_i + deg_j - 2 is at most the window.
  const SparseVec* br(std::size_t i, std::size_t j) const {
    return degree_[i] + degree_[j] - 2 <= window_ ? &br_[i * size() + j] : nullptr;
  }

  std::vector<long long> dims() const {
    std::vector<long long> out;
    for (int d = 0; d <= window_; ++d) out.push_back(static_cast<long long>(dim(d)));
    return out;
  }

  friend TruncatedGradedAlgebra truncated_from_bases(const std::vector<std::vector<QPoly>>&, const Bivector<Rational>&);

 private:
  int window_ = 0;
  int max_gen_ = 0;
  std::vector<int> degree_;
  std::vector<std::vector<std::size_t>> of_degree_;
  std::vector<QPoly> basis_;
  std::vector<SparseVec> mul_, br_;
};

namespace detail {

inline std::vector<QPoly> canonical_q(const std::vector<QPoly>& ps, std::size_t n, int d) {
  auto monos = monomials(n, d);
  std::map<Mono, std::size_t> col;
  for (std::size_t j = 0; j < monos.size(); ++j) col.emplace(monos[j], j);
  QMat M(ps.size(), monos.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (const auto& [m, c] : ps[i].terms()) {
      auto it = col.find(m);
      if (it == col.end()) throw std::invalid_argument("basis element is not homogeneous of its degree");
      M(i, it->second) = c;
    }
  auto E = rref(M);
  std::vector<QPoly> out;
  for (std::size_t r = 0; r < E.pivots.size(); ++r) {
    QPoly p(n);
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!E.rref(r, j).is_zero()) p.add_term(monos[j], E.rref(r, j));
    out.push_back(std::move(p));
  }
  return out;
}

inline std::optional<SparseVec> coordinates_q(const std::vector<QPoly>& basis, std::size_t offset, const QPoly& f) {
  SparseVec x;
  QPoly rest = f;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational c = rest.coeff(basis[i].terms().begin()->first);
    if (c.is_zero()) continue;
    x[offset + i] = c;
    rest -= c * basis[i];
  }
  if (!rest.is_zero()) return std::nullopt;
  return x;
}

inline QPoly to_rational(const CPoly& f) {
  QPoly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_rational()) throw std::invalid_argument("invariant basis has irrational coefficients");
    out.add_term(m, c.rational_part());
  }
  return out;
}

}  // namespace detail

// Tables from bases of each graded piece (any spanning sets; they are put in reduced echelon form).
inline TruncatedGradedAlgebra truncated_from_bases(const std::vector<std::vector<QPoly>>& pieces,
                                                   const Bivector<Rational>& B) {
  if (pieces.empty()) throw std::invalid_argument("need at least the degree 0 piece");
  TruncatedGradedAlgebra A;
  std::size_t n = B.n;
  A.window_ = static_cast<int>(pieces.size()) - 1;
  std::vector<std::vector<QPoly>> canon;
  std::vector<std::size_t> offset;
  for (int d = 0; d <= A.window_; ++d) {
    canon.push_back(detail::canonical_q(pieces[d], n, d));
    offset.push_back(A.basis_.size());
    A.of_degree_.emplace_back();
    for (auto& p : canon.back()) {
      A.of_degree_.back().push_back(A.basis_.size());
      A.degree_.push_back(d);
      A.basis_.push_back(p);
    }
  }
  std::size_t N = A.basis_.size();
  A.mul_.assign(N * N, {});
  A.br_.assign(N * N, {});
  auto locate = [&](const QPoly& f, int d, const char* what) {
    if (f.is_zero()) return SparseVec{};
    auto x = d >= 0 && d <= A.window_ ? detail::coordinates_q(canon[d], offset[d], f) : std::nullopt;
    if (!x) throw std::invalid_argument(std::string(what) + " leaves the algebra: " + f.str());
    return *x;
  };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      int di = A.degree_[i], dj = A.degree_[j];
      if (di + dj <= A.window_) A.mul_[i * N + j] = locate(A.basis_[i] * A.basis_[j], di + dj, "product");
      if (di + dj - 2 <= A.window_) A.br_[i * N + j] = locate(bracket(A.basis_[i], A.basis_[j], B), di + dj - 2, "bracket");
    }
  for (int d = 1; d <= A.window_; ++d) {
    SparseEchelon dec;
    for (int p = 1; p < d; ++p)
      for (auto i : A.of_degree_[p])
        for (auto j : A.of_degree_[d - p]) dec.insert(A.mul_[i * N + j]);
    if (dec.rank() < A.of_degree_[d].size()) A.max_gen_ = d;
  }
  return A;
}

struct AuditReport {
  bool pass = true;
  std::string failure;
};

namespace detail {

inline std::optional<SparseVec> table_apply(const TruncatedGradedAlgebra& A, bool bracket, const SparseVec& x,
                                            const SparseVec& y) {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const SparseVec* t = bracket ? A.br(i, j) : A.mul(i, j);
      if (!t) return std::nullopt;
      axpy(out, a * b, *t);
    }
  return out;
}

inline SparseVec unit_vec(std::size_t i) { return SparseVec{{i, Rational(1)}}; }

}  // namespace detail

// Unit, commutativity, associativity, skew symmetry, Leibniz and Jacobi wherever all terms are defined.
inline AuditReport audit(const TruncatedGradedAlgebra& A) {
  AuditReport rep;
  auto fail = [&](const std::string& what, std::size_t a, std::size_t b, std::size_t c) {
    if (rep.pass)
      rep.failure = what + " fails at (" + A.element(a).str() + ", " + A.element(b).str() + ", " + A.element(c).str() + ")";
    rep.pass = false;
  };
  if (A.dim(0) != 1 || !A.element(0).is_homogeneous() || A.element(0).degree() != 0) {
    rep.pass = false;
    rep.failure = "degree 0 piece is not spanned by 1";
    return rep;
  }
  std::size_t N = A.size();
  using detail::table_apply;
  using detail::unit_vec;
  for (std::size_t a = 0; a < N && rep.pass; ++a)
    for (std::size_t b = 0; b < N && rep.pass; ++b) {
      if (A.mul(a, b) && *A.mul(a, b) != *A.mul(b, a)) fail("commutativity", a, b, b);
      if (A.br(a, b)) {
        SparseVec s = *A.br(a, b);
        axpy(s, Rational(1), *A.br(b, a));
        if (!s.empty()) fail("skew symmetry", a, b, b);
      }
      for (std::size_t c = 0; c < N && rep.pass; ++c) {
        auto ea = unit_vec(a), eb = unit_vec(b), ec = unit_vec(c);
        auto ab = table_apply(A, false, ea, eb), bc = table_apply(A, false, eb, ec);
        if (ab && bc) {
          auto l = table_apply(A, false, *ab, ec), r = table_apply(A, false, ea, *bc);
          if (l && r && *l != *r) fail("associativity", a, b, c);
        }
        auto abr = table_apply(A, true, ea, eb), acr = table_apply(A, true, ea, ec);
        if (bc && abr && acr) {
          auto l = table_apply(A, true, ea, *bc);
          auto r1 = table_apply(A, false, *abr, ec), r2 = table_apply(A, false, eb, *acr);
          if (l && r1 && r2) {
            SparseVec s = *l;
            axpy(s, Rational(-1), *r1);
            axpy(s, Rational(-1), *r2);
            if (!s.empty()) fail("Leibniz", a, b, c);
          }
        }
        if (a < b && b < c) {
          SparseVec s;
          bool ok = true;
          for (auto [x, y, z] : {std::array<std::size_t, 3>{a, b, c}, {b, c, a}, {c, a, b}}) {
            auto yz = table_apply(A, true, unit_vec(y), unit_vec(z));
            auto t = yz ? table_apply(A, true, unit_vec(x), *yz) : std::nullopt;
            if (!t) {
              ok = false;
              break;
            }
            axpy(s, Rational(1), *t);
          }
          if (ok && !s.empty()) fail("Jacobi", a, b, c);
        }
      }
    }
  return rep;
}

// Graded pieces of C[V]^G up to degree D with the bracket induced from the symplectic form.
inline TruncatedGradedAlgebra build_truncated(const MatrixGroup& G, int D, std::uint64_t seed = 0) {
  if (D < 2) throw std::invalid_argument("window must be at least 2");
  InvariantRing R(G, seed);
  std::vector<std::vector<QPoly>> pieces;
  for (int d = 0; d <= D; ++d) {
    pieces.emplace_back();
    for (const auto& f : R.basis(d)) pieces.back().push_back(detail::to_rational(f));
  }
  auto Bc = standard_bivector(G.space().form);
  Bivector<Rational> B(Bc.n);
  for (std::size_t i = 0; i < B.n; ++i)
    for (std::size_t j = 0; j < B.n; ++j) B.theta[i][j] = detail::to_rational(Bc.theta[i][j]);
  auto A = truncated_from_bases(pieces, B);
  auto rep = audit(A);
  if (!rep.pass) throw std::logic_error("truncated algebra audit: " + rep.failure);
  return A;
}

}  // namespace mckaykit
