#pragma once

#include "mckaykit/group.hpp"
#include "mckaykit/modular.hpp"
#include "mckaykit/molien.hpp"
#include "mckaykit/poly.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace mckaykit {

namespace detail {

inline bool is_monomial_matrix(const Mat& g) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::size_t nz = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) nz += !g(i, j).is_zero();
    if (nz != 1) return false;
  }
  return true;
}

// x_i -> scale[i] * x_{target[i]}
struct MonomialMap {
  std::vector<std::size_t> target;
  std::vector<CycloNum> scale;
};

inline MonomialMap monomial_map(const Mat& g) {
  MonomialMap m;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!g(i, j).is_zero()) {
        m.target.push_back(j);
        m.scale.push_back(g(i, j));
      }
  return m;
}

inline std::pair<CycloNum, Mono> apply_monomial(const MonomialMap& g, const Mono& m) {
  Mono out(m.size(), 0);
  CycloNum c(1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out[g.target[i]] = static_cast<std::uint16_t>(out[g.target[i]] + m[i]);
    for (int e = 0; e < m[i]; ++e) c *= g.scale[i];
  }
  return {c, out};
}

// Connected components of variables linked by nonzero generator entries.
inline std::vector<std::size_t> coordinate_blocks(const std::vector<QMat>& gens, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!g(i, j).is_zero()) parent[find(i)] = find(j);
  std::map<std::size_t, std::size_t> label;
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = label.emplace(find(i), label.size()).first->second;
  return block;
}

// Reduced row echelon form of polynomials over GrLex-ordered monomials; leading coefficients 1.
inline std::vector<CPoly> canonical_span(const std::vector<CPoly>& ps, std::size_t nvars) {
  std::set<Mono, GrLex> support;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) support.insert(m);
  std::vector<Mono> cols(support.begin(), support.end());
  std::map<Mono, std::size_t, GrLex> col_of;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;
  Mat M(ps.size(), cols.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (const auto& [m, c] : ps[i].terms()) M(i, col_of[m]) = c;
  auto E = rref(M);
  std::vector<CPoly> out;
  for (std::size_t r = 0; r < E.pivots.size(); ++r) {
    CPoly p(nvars);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!E.rref(r, j).is_zero()) p.add_term(cols[j], E.rref(r, j));
    out.push_back(std::move(p));
  }
  return out;
}

struct RationalAction {
  std::vector<QMat> gens;
  std::vector<std::size_t> block;
  std::size_t nblocks = 0;
};

// Invariants of one multidegree block: kernel of stacked random row-scalings of (rho(s) - 1) mod p,
// lifted by CRT and rational reconstruction, then verified exactly against every generator.
inline std::vector<QPoly> rational_block_invariants(const RationalAction& A, const std::vector<Mono>& monos,
                                                    std::uint64_t seed) {
  std::size_t n = monos.size(), nv = A.block.size(), ng = A.gens.size();
  if (n == 0) return {};
  std::map<Mono, std::size_t> col;
  for (std::size_t j = 0; j < n; ++j) col[monos[j]] = j;
  // exact sparse columns of rho(s) - 1
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> cols(ng,
                                                                               std::vector<std::vector<std::pair<std::size_t, Rational>>>(n));
  for (std::size_t s = 0; s < ng; ++s)
    for (std::size_t j = 0; j < n; ++j) {
      QPoly img = substitute(A.gens[s], QPoly::monomial(monos[j]));
      img.add_term(monos[j], Rational(-1));
      for (const auto& [m, c] : img.terms()) {
        auto it = col.find(m);
        if (it == col.end()) throw std::logic_error("generator does not preserve the multigrading");
        cols[s][j].emplace_back(it->second, c);
      }
    }
  std::mt19937_64 rng(seed);
  for (std::size_t combos = 1; combos <= ng; ++combos) {
    std::vector<std::vector<std::vector<std::uint32_t>>> scal(combos, std::vector<std::vector<std::uint32_t>>(ng));
    for (auto& c : scal)
      for (auto& v : c) {
        v.resize(n);
        for (auto& x : v) x = static_cast<std::uint32_t>(1 + rng() % 1000003);
      }
    mpz_class modulus = 1;
    std::vector<std::vector<mpz_class>> acc;
    modp::Kernel shape;
    std::vector<QPoly> last;
    for (std::size_t pi = 0; pi < 8; ++pi) {
      std::uint32_t p = modp::prime(pi);
      std::size_t rows = combos * n;
      std::vector<std::uint32_t> a(rows * n, 0);
      bool bad = false;
      for (std::size_t s = 0; s < ng && !bad; ++s)
        for (std::size_t j = 0; j < n && !bad; ++j)
          for (const auto& [i, c] : cols[s][j]) {
            auto r = modp::reduce(c, p);
            if (!r) {
              bad = true;
              break;
            }
            for (std::size_t k = 0; k < combos; ++k) {
              std::uint32_t& e = a[(k * n + i) * n + j];
              e = static_cast<std::uint32_t>((e + static_cast<std::uint64_t>(*r) * scal[k][s][i]) % p);
            }
          }
      if (bad) continue;
      modp::Kernel K = modp::kernel(a, rows, n, p);
      if (K.free.empty()) return {};
      if (pi == 0 || K.free != shape.free) {
        // a different pivot pattern means an unlucky prime somewhere; restart the lift from here
        shape = K;
        modulus = p;
        acc.assign(K.basis.size(), std::vector<mpz_class>(n));
        for (std::size_t b = 0; b < K.basis.size(); ++b)
          for (std::size_t j = 0; j < n; ++j) acc[b][j] = K.basis[b][j];
      } else {
        mpz_class pz(p);
        mpz_class inv;
        mpz_class mm = modulus % pz;
        mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t b = 0; b < K.basis.size(); ++b)
          for (std::size_t j = 0; j < n; ++j) {
            mpz_class t = (mpz_class(K.basis[b][j]) - acc[b][j] % pz) * inv % pz;
            if (t < 0) t += pz;
            acc[b][j] += modulus * t;
          }
        modulus *= pz;
      }
      std::vector<QPoly> cand;
      bool ok = true;
      for (std::size_t b = 0; b < acc.size() && ok; ++b) {
        QPoly f(nv);
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (acc[b][j] == 0) continue;
          auto q = modp::reconstruct(acc[b][j], modulus);
          if (!q)
            ok = false;
          else
            f.add_term(monos[j], *q);
        }
        cand.push_back(std::move(f));
      }
      if (!ok) continue;
      bool invariant = true;
      for (std::size_t b = 0; b < cand.size() && invariant; ++b) {
        std::vector<Rational> v(n);
        for (const auto& [m, c] : cand[b].terms()) v[col[m]] = c;
        for (std::size_t s = 0; s < ng && invariant; ++s) {
          std::vector<Rational> w(n);
          for (std::size_t j = 0; j < n; ++j)
            if (!v[j].is_zero())
              for (const auto& [i, c] : cols[s][j]) w[i] += c * v[j];
          for (const auto& x : w)
            if (!x.is_zero()) {
              invariant = false;
              break;
            }
        }
      }
      if (invariant) return cand;
      // stable reconstruction that is not invariant: the kernel is too large, add a combination
      if (!last.empty() && last == cand) break;
      last = std::move(cand);
    }
  }
  throw std::runtime_error("invariant lift did not converge");
}

}  // namespace detail

// Average of f over G under x -> g x.
inline CPoly reynolds(const MatrixGroup& G, const CPoly& f) {
  CPoly out(f.nvars());
  for (std::uint32_t i = 0; i < G.order(); ++i) out += substitute(G.element(i), f);
  return CycloNum(Rational(1, static_cast<long long>(G.order()))) * out;
}

class InvariantRing {
 public:
  explicit InvariantRing(const MatrixGroup& G, std::uint64_t seed = 0) : G_(&G), seed_(seed) {
    std::vector<Mat> gens;
    for (auto g : G.generators()) gens.push_back(G.element(g));
    monomial_ = std::all_of(gens.begin(), gens.end(), detail::is_monomial_matrix);
    if (monomial_) {
      for (std::uint32_t i = 0; i < G.order(); ++i) maps_.push_back(detail::monomial_map(G.element(i)));
    } else if (G.conductor() == 1) {
      for (auto g : G.generators()) rat_.gens.push_back(G.element_q(g));
      rat_.block = detail::coordinate_blocks(rat_.gens, G.dim());
      rat_.nblocks = rat_.block.empty() ? 0 : *std::max_element(rat_.block.begin(), rat_.block.end()) + 1;
    }
  }

  std::size_t nvars() const { return G_->dim(); }
  bool monomial_path() const { return monomial_; }

  // Canonical basis of (C[V]^G)_d: reduced echelon form over GrLex monomials.
  const std::vector<CPoly>& basis(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    std::vector<CPoly> b;
    if (monomial_)
      b = monomial_basis(d);
    else if (G_->conductor() == 1)
      b = rational_basis(d);
    else
      b = reynolds_basis(d);
    return cache_.emplace(d, std::move(b)).first->second;
  }

 private:
  const MatrixGroup* G_;
  std::uint64_t seed_;
  bool monomial_ = false;
  std::vector<detail::MonomialMap> maps_;
  detail::RationalAction rat_;
  std::map<int, std::vector<CPoly>> cache_;

  std::vector<CPoly> monomial_basis(int d) const {
    std::size_t n = nvars();
    std::set<Mono> seen;
    std::vector<CPoly> out;
    for (const auto& m : monomials(n, d)) {
      if (seen.count(m)) continue;
      CPoly r(n);
      for (const auto& g : maps_) {
        auto [c, img] = detail::apply_monomial(g, m);
        seen.insert(img);
        r.add_term(img, c);
      }
      if (r.is_zero()) continue;
      CycloNum lead = r.terms().begin()->second;
      out.push_back(lead.inv() * r);
    }
    // disjoint orbit supports: already reduced; order by leading monomial
    std::sort(out.begin(), out.end(),
              [](const CPoly& a, const CPoly& b) { return GrLex{}(a.terms().begin()->first, b.terms().begin()->first); });
    return out;
  }

  std::vector<CPoly> rational_basis(int d) const {
    std::size_t n = nvars();
    std::map<std::vector<int>, std::vector<Mono>> by_multidegree;
    for (const auto& m : monomials(n, d)) {
      std::vector<int> md(rat_.nblocks, 0);
      for (std::size_t i = 0; i < n; ++i) md[rat_.block[i]] += m[i];
      by_multidegree[md].push_back(m);
    }
    std::vector<CPoly> all;
    std::uint64_t s = seed_ * 1000003ULL + static_cast<std::uint64_t>(d);
    for (const auto& [md, monos] : by_multidegree)
      for (const auto& q : detail::rational_block_invariants(rat_, monos, s++)) {
        CPoly c(n);
        for (const auto& [m, x] : q.terms()) c.add_term(m, CycloNum(x));
        all.push_back(std::move(c));
      }
    return detail::canonical_span(all, n);
  }

  std::vector<CPoly> reynolds_basis(int d) const {
    std::size_t n = nvars();
    std::vector<Mat> elems;
    for (std::uint32_t i = 0; i < G_->order(); ++i) elems.push_back(G_->element(i));
    std::vector<CPoly> all;
    for (const auto& m : monomials(n, d)) {
      CPoly r(n);
      for (const auto& g : elems) r += substitute(g, CPoly::monomial(m));
      if (!r.is_zero()) all.push_back(std::move(r));
    }
    return detail::canonical_span(all, n);
  }
};

inline std::vector<CPoly> invariant_basis(const MatrixGroup& G, int d, std::uint64_t seed = 0) {
  InvariantRing R(G, seed);
  return R.basis(d);
}

// Coordinates of f in a canonical (reduced echelon) basis; nullopt when f is outside the span.
inline std::optional<std::vector<CycloNum>> coordinates(const std::vector<CPoly>& basis, const CPoly& f) {
  std::vector<CycloNum> x(basis.size());
  CPoly rest = f;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Mono& lead = basis[i].terms().begin()->first;
    CycloNum c = rest.coeff(lead);
    if (c.is_zero()) continue;
    x[i] = c;
    rest -= c * basis[i];
  }
  if (!rest.is_zero()) return std::nullopt;
  return x;
}

struct ClosureReport {
  bool pass = true;
  std::size_t brackets = 0;
  std::string failure;
};

// Brackets of invariant basis elements with degree sum - 2 <= D stay invariant of the right degree.
inline ClosureReport bracket_closure_check(const MatrixGroup& G, int D, std::uint64_t seed = 0) {
  InvariantRing R(G, seed);
  auto B = standard_bivector(G.space().form);
  ClosureReport rep;
  for (int p = 0; p <= D + 2; ++p)
    for (int q = p; p + q - 2 <= D; ++q) {
      const auto bp = R.basis(p);
      const auto bq = R.basis(q);
      for (const auto& f : bp)
        for (const auto& g : bq) {
          ++rep.brackets;
          CPoly h = bracket(f, g, B);
          if (h.is_zero()) continue;
          int deg = p + q - 2;
          if (!h.is_homogeneous() || h.degree() != deg || !coordinates(R.basis(deg), h)) {
            rep.pass = false;
            if (rep.failure.empty()) rep.failure = "{" + f.str() + ", " + g.str() + "} = " + h.str();
          }
        }
    }
  return rep;
}

}  // namespace mckaykit
