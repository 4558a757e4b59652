#pragma once

#include "mckaykit/truncated.hpp"

#include <array>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckaykit {

// First-order deformation a.b + e phi(a,b), {a,b} + e psi(a,b) of A-degree m.
struct CochainPair {
  using Key = std::pair<std::size_t, std::size_t>;
  int m = 0;
  std::map<Key, SparseVec> phi;  // i <= j, values in A_{deg i + deg j + m}
  std::map<Key, SparseVec> psi;  // i < j, values in A_{deg i + deg j + m - 2}

  bool is_zero() const {
    for (const auto& [k, v] : phi)
      if (!v.empty()) return false;
    for (const auto& [k, v] : psi)
      if (!v.empty()) return false;
    return true;
  }
  CochainPair& add(const CochainPair& o, const Rational& c) {
    if (o.m != m) throw std::invalid_argument("adding cochain pairs of different degree");
    for (const auto& [k, v] : o.phi) axpy(phi[k], c, v);
    for (const auto& [k, v] : o.psi) axpy(psi[k], c, v);
    return *this;
  }
};

struct InvalidCocycle : std::invalid_argument {
  explicit InvalidCocycle(const std::string& w) : std::invalid_argument("not a first-order cocycle: " + w) {}
};

struct HpDegree {
  int m = 0;
  long long dim = 0;  // certified
  long long raw = 0;  // dimension of the truncated complex, including window artefacts
};

struct HpResult {
  int k = 0;
  int window = 0;
  int level = 0;  // outputs of degree <= level enter the certified dimension
  std::vector<HpDegree> degrees;
  std::vector<CochainPair> basis;
  long long total() const {
    long long s = 0;
    for (const auto& d : degrees) s += d.dim;
    return s;
  }
};

namespace detail {

constexpr std::size_t kConst = std::numeric_limits<std::size_t>::max();
using Form = std::map<std::size_t, SparseVec>;  // target basis index -> affine form in the unknowns
using Opt = std::optional<Form>;
using Bilinear = std::function<Opt(std::size_t, std::size_t)>;
using Unary = std::function<Opt(std::size_t)>;

struct Scope {
  const TruncatedGradedAlgebra* A;
  int m;
  int W;
  int deg(std::size_t i) const { return A->degree(i); }
  bool phi_ok(std::size_t i, std::size_t j) const {
    int s = deg(i) + deg(j);
    return s <= W && s + m >= 0 && s + m <= W;
  }
  bool psi_ok(std::size_t i, std::size_t j) const {
    int s = deg(i) + deg(j);
    return s - 2 <= W && s + m - 2 >= 0 && s + m - 2 <= W && deg(i) <= W && deg(j) <= W && deg(i) + m <= W &&
           deg(j) + m <= W;
  }
  bool f_ok(std::size_t i) const { return deg(i) <= W && deg(i) + m >= 0 && deg(i) + m <= W; }
  const SparseVec* mul(std::size_t i, std::size_t j) const { return deg(i) + deg(j) <= W ? A->mul(i, j) : nullptr; }
  const SparseVec* br(std::size_t i, std::size_t j) const { return deg(i) + deg(j) - 2 <= W ? A->br(i, j) : nullptr; }
};

inline bool add(Form& out, const Opt& f, const Rational& c) {
  if (!f) return false;
  for (const auto& [k, lin] : *f) {
    auto& slot = out[k];
    axpy(slot, c, lin);
    if (slot.empty()) out.erase(k);
  }
  return true;
}

inline Form constant_form(const SparseVec& x) {
  Form f;
  for (const auto& [k, v] : x) f[k] = SparseVec{{kConst, v}};
  return f;
}

inline SparseVec constant_part(const Form& f) {
  SparseVec x;
  for (const auto& [k, lin] : f)
    for (const auto& [j, v] : lin) {
      if (j != kConst) throw std::logic_error("expected a constant form");
      x[k] = v;
    }
  return x;
}

inline Opt apply_left(const Bilinear& F, const SparseVec& x, std::size_t c) {
  Form out;
  for (const auto& [e, a] : x)
    if (!add(out, F(e, c), a)) return std::nullopt;
  return out;
}
inline Opt apply_right(const Bilinear& F, std::size_t a, const SparseVec& y) {
  Form out;
  for (const auto& [e, b] : y)
    if (!add(out, F(a, e), b)) return std::nullopt;
  return out;
}
inline Opt apply(const Unary& F, const SparseVec& x) {
  Form out;
  for (const auto& [e, a] : x)
    if (!add(out, F(e), a)) return std::nullopt;
  return out;
}

// e_a * f and {e_a, f} for a form f.
inline Opt times(const Scope& S, std::size_t a, const Opt& f) {
  if (!f) return std::nullopt;
  Form out;
  for (const auto& [k, lin] : *f) {
    const SparseVec* p = S.mul(a, k);
    if (!p) return std::nullopt;
    for (const auto& [t, c] : *p) add(out, Form{{t, lin}}, c);
  }
  return out;
}
inline Opt bracket_with(const Scope& S, std::size_t a, const Opt& f) {
  if (!f) return std::nullopt;
  Form out;
  for (const auto& [k, lin] : *f) {
    const SparseVec* p = S.br(a, k);
    if (!p) return std::nullopt;
    for (const auto& [t, c] : *p) add(out, Form{{t, lin}}, c);
  }
  return out;
}

// Unknowns of a cochain pair or a degree-m map, indexed by (kind, i, j, target).
struct Unknowns {
  std::map<std::array<std::size_t, 4>, std::size_t> index;
  std::vector<std::array<std::size_t, 4>> key;
  std::size_t size() const { return key.size(); }
  std::size_t add(std::array<std::size_t, 4> k) {
    auto [it, fresh] = index.emplace(k, key.size());
    if (fresh) key.push_back(k);
    return it->second;
  }
};

constexpr std::size_t kPhi = 0, kPsi = 1, kMap = 2;

inline Unknowns pair_unknowns(const Scope& S) {
  Unknowns U;
  std::size_t N = S.A->size();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      if (S.phi_ok(i, j))
        for (auto k : S.A->of_degree(S.deg(i) + S.deg(j) + S.m)) U.add({kPhi, i, j, k});
      if (i < j && S.psi_ok(i, j))
        for (auto k : S.A->of_degree(S.deg(i) + S.deg(j) + S.m - 2)) U.add({kPsi, i, j, k});
    }
  return U;
}

inline Unknowns map_unknowns(const Scope& S) {
  Unknowns U;
  for (std::size_t i = 0; i < S.A->size(); ++i)
    if (S.f_ok(i))
      for (auto k : S.A->of_degree(S.deg(i) + S.m)) U.add({kMap, i, 0, k});
  return U;
}

inline Bilinear unknown_phi(const Scope& S, const Unknowns& U) {
  return [S, &U](std::size_t i, std::size_t j) -> Opt {
    if (i > j) std::swap(i, j);
    int t = S.deg(i) + S.deg(j) + S.m;
    if (t < 0) return Form{};
    if (!S.phi_ok(i, j)) return std::nullopt;
    Form f;
    for (auto k : S.A->of_degree(t)) f[k] = SparseVec{{U.index.at({kPhi, i, j, k}), Rational(1)}};
    return f;
  };
}
inline Bilinear unknown_psi(const Scope& S, const Unknowns& U) {
  return [S, &U](std::size_t i, std::size_t j) -> Opt {
    int t = S.deg(i) + S.deg(j) + S.m - 2;
    if (i == j || t < 0) return Form{};
    if (!S.psi_ok(i, j)) return std::nullopt;
    Rational s(1);
    if (i > j) {
      std::swap(i, j);
      s = Rational(-1);
    }
    Form f;
    for (auto k : S.A->of_degree(t)) f[k] = SparseVec{{U.index.at({kPsi, i, j, k}), s}};
    return f;
  };
}
inline Unary unknown_map(const Scope& S, const Unknowns& U) {
  return [S, &U](std::size_t i) -> Opt {
    int t = S.deg(i) + S.m;
    if (t < 0) return Form{};
    if (!S.f_ok(i)) return std::nullopt;
    Form f;
    for (auto k : S.A->of_degree(t)) f[k] = SparseVec{{U.index.at({kMap, i, 0, k}), Rational(1)}};
    return f;
  };
}

inline Bilinear known_phi(const Scope& S, const CochainPair& g) {
  return [S, &g](std::size_t i, std::size_t j) -> Opt {
    if (i > j) std::swap(i, j);
    if (S.deg(i) + S.deg(j) + S.m < 0) return Form{};
    if (!S.phi_ok(i, j)) return std::nullopt;
    auto it = g.phi.find({i, j});
    return it == g.phi.end() ? Form{} : constant_form(it->second);
  };
}
inline Bilinear known_psi(const Scope& S, const CochainPair& g) {
  return [S, &g](std::size_t i, std::size_t j) -> Opt {
    if (i == j || S.deg(i) + S.deg(j) + S.m - 2 < 0) return Form{};
    if (!S.psi_ok(i, j)) return std::nullopt;
    Rational s(1);
    if (i > j) {
      std::swap(i, j);
      s = Rational(-1);
    }
    auto it = g.psi.find({i, j});
    if (it == g.psi.end()) return Form{};
    Form f = constant_form(it->second);
    for (auto& [k, lin] : f) lin[kConst] *= s;
    return f;
  };
}
inline Unary known_map(const Scope& S, const std::map<std::size_t, SparseVec>& f) {
  return [S, &f](std::size_t i) -> Opt {
    if (S.deg(i) + S.m < 0) return Form{};
    if (!S.f_ok(i)) return std::nullopt;
    auto it = f.find(i);
    return it == f.end() ? Form{} : constant_form(it->second);
  };
}

struct Condition {
  char kind;  // 'A'ssociativity, 'L'eibniz, 'J'acobi, 'D'erivation, 'P'oisson derivation
  std::size_t a, b, c;
  Form form;
};

inline std::string describe(const TruncatedGradedAlgebra& A, const Condition& c) {
  std::string name = c.kind == 'A' ? "associativity" : c.kind == 'L' ? "Leibniz" : c.kind == 'J' ? "Jacobi" : "derivation";
  return name + "(" + A.element(c.a).str() + ", " + A.element(c.b).str() + ", " + A.element(c.c).str() + ")";
}

// Quadratic term of the order-two equations, bilinear in (outer, inner).
struct Source {
  Bilinear ophi, opsi, iphi, ipsi;
};

// Pair (phi, psi) is a first-order Poisson deformation iff every in-scope form vanishes.
// Sources, when given, are added to every condition.
inline std::vector<Condition> pair_conditions(const Scope& S, const Bilinear& phi, const Bilinear& psi,
                                              const std::vector<Source>& src = {}) {
  std::vector<Condition> out;
  std::size_t N = S.A->size();
  const Rational one(1), neg(-1);
  auto elem = [](const SparseVec* p) { return p ? std::optional<SparseVec>(*p) : std::nullopt; };
  auto cst = [](const Opt& f) { return f ? std::optional<SparseVec>(constant_part(*f)) : std::nullopt; };
  for (std::size_t a = 0; a < N; ++a) {
    if (S.deg(a) > S.W) continue;
    for (std::size_t b = 0; b < N; ++b) {
      if (S.deg(b) > S.W) continue;
      for (std::size_t c = 0; c < N; ++c) {
        if (S.deg(c) > S.W) continue;
        if (a <= c) {
          auto ab = elem(S.mul(a, b)), bc = elem(S.mul(b, c));
          Form F;
          bool ok = ab && bc;
          ok = ok && add(F, times(S, c, phi(a, b)), one);
          ok = ok && add(F, apply_left(phi, *ab, c), one);
          ok = ok && add(F, times(S, a, phi(b, c)), neg);
          ok = ok && add(F, apply_right(phi, a, *bc), neg);
          for (const auto& q : src) {
            if (!ok) break;
            auto x = cst(q.iphi(a, b)), y = cst(q.iphi(b, c));
            ok = x && y;
            ok = ok && add(F, apply_left(q.ophi, *x, c), one);
            ok = ok && add(F, apply_right(q.ophi, a, *y), neg);
          }
          if (ok && !F.empty()) out.push_back({'A', a, b, c, std::move(F)});
        }
        if (b <= c) {
          auto bc = elem(S.mul(b, c)), ab = elem(S.br(a, b)), ac = elem(S.br(a, c));
          Form F;
          bool ok = bc && ab && ac;
          ok = ok && add(F, apply_right(psi, a, *bc), one);
          ok = ok && add(F, bracket_with(S, a, phi(b, c)), one);
          ok = ok && add(F, times(S, c, psi(a, b)), neg);
          ok = ok && add(F, times(S, b, psi(a, c)), neg);
          ok = ok && add(F, apply_left(phi, *ab, c), neg);
          ok = ok && add(F, apply_right(phi, b, *ac), neg);
          for (const auto& q : src) {
            if (!ok) break;
            auto x = cst(q.iphi(b, c)), y = cst(q.ipsi(a, b)), z = cst(q.ipsi(a, c));
            ok = x && y && z;
            ok = ok && add(F, apply_right(q.opsi, a, *x), one);
            ok = ok && add(F, apply_left(q.ophi, *y, c), neg);
            ok = ok && add(F, apply_right(q.ophi, b, *z), neg);
          }
          if (ok && !F.empty()) out.push_back({'L', a, b, c, std::move(F)});
        }
        if (a < b && b < c) {
          Form F;
          bool ok = true;
          for (auto [x, y, z] : {std::array<std::size_t, 3>{a, b, c}, {b, c, a}, {c, a, b}}) {
            auto yz = elem(S.br(y, z));
            ok = ok && yz && add(F, apply_right(psi, x, *yz), one);
            ok = ok && add(F, bracket_with(S, x, psi(y, z)), one);
            for (const auto& q : src) {
              if (!ok) break;
              auto w = cst(q.ipsi(y, z));
              ok = w && add(F, apply_right(q.opsi, x, *w), one);
            }
            if (!ok) break;
          }
          if (ok && !F.empty()) out.push_back({'J', a, b, c, std::move(F)});
        }
      }
    }
  }
  return out;
}

// f(ab) = a f(b) + f(a) b and f{a,b} = {fa,b} + {a,fb}.
inline std::vector<Condition> derivation_conditions(const Scope& S, const Unary& f) {
  std::vector<Condition> out;
  std::size_t N = S.A->size();
  const Rational one(1), neg(-1);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      if (S.deg(a) > S.W || S.deg(b) > S.W) continue;
      if (const SparseVec* ab = S.mul(a, b)) {
        Form F;
        bool ok = add(F, apply(f, *ab), one) && add(F, times(S, a, f(b)), neg) && add(F, times(S, b, f(a)), neg);
        if (ok && !F.empty()) out.push_back({'D', a, b, b, std::move(F)});
      }
      if (const SparseVec* ab = S.br(a, b); ab && a < b) {
        Form F;
        bool ok = add(F, apply(f, *ab), one) && add(F, bracket_with(S, b, f(a)), one) &&
                  add(F, bracket_with(S, a, f(b)), neg);
        if (ok && !F.empty()) out.push_back({'P', a, b, b, std::move(F)});
      }
    }
  return out;
}

inline SparseVec to_row(const SparseVec& lin, std::size_t nvars) {
  SparseVec r;
  for (const auto& [j, v] : lin) r[j == kConst ? nvars : j] = v;
  return r;
}

// Rows of all conditions, shortest first: short rows keep elimination chains short.
inline std::vector<std::pair<SparseVec, std::size_t>> condition_rows(const std::vector<Condition>& conds,
                                                                     std::size_t nvars) {
  std::vector<std::pair<SparseVec, std::size_t>> rows;
  for (std::size_t i = 0; i < conds.size(); ++i)
    for (const auto& [k, lin] : conds[i].form) rows.emplace_back(to_row(lin, nvars), i);
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  return rows;
}

inline SparseEchelon condition_echelon(const std::vector<Condition>& conds, std::size_t nvars) {
  SparseEchelon E;
  for (const auto& [row, i] : condition_rows(conds, nvars)) E.insert(row);
  return E;
}

// (-df, delta f): -df(a,b) = a f(b) + f(a) b - f(ab), delta f(a,b) = {fa,b} + {a,fb} - f{a,b}.
inline SparseVec coboundary_vector(const Scope& S, const Unknowns& U, const Unary& f) {
  SparseVec v;
  const Rational one(1), neg(-1);
  for (std::size_t u = 0; u < U.size(); ++u) {
    const auto& key = U.key[u];
    std::size_t a = key[1], b = key[2];
    if (u > 0 && U.key[u - 1][0] == key[0] && U.key[u - 1][1] == a && U.key[u - 1][2] == b) continue;
    Form F;
    bool ok;
    if (key[0] == kPhi)
      ok = add(F, times(S, a, f(b)), one) && add(F, times(S, b, f(a)), one) && add(F, apply(f, *S.mul(a, b)), neg);
    else
      ok = add(F, bracket_with(S, b, f(a)), neg) && add(F, bracket_with(S, a, f(b)), one) &&
           add(F, apply(f, *S.br(a, b)), neg);
    if (!ok) throw std::logic_error("coboundary component outside the window");
    for (const auto& [t, lin] : F) {
      auto it = lin.find(kConst);
      if (it != lin.end()) v[U.index.at({key[0], a, b, t})] = it->second;
    }
  }
  return v;
}

inline CochainPair to_pair(const Unknowns& U, const SparseVec& x, int m) {
  CochainPair g;
  g.m = m;
  for (const auto& [j, v] : x) {
    const auto& k = U.key[j];
    (k[0] == kPhi ? g.phi : g.psi)[{k[1], k[2]}][k[3]] = v;
  }
  return g;
}

inline SparseVec from_pair(const Unknowns& U, const CochainPair& g) {
  SparseVec x;
  for (std::size_t kind : {kPhi, kPsi})
    for (const auto& [ij, val] : kind == kPhi ? g.phi : g.psi)
      for (const auto& [k, v] : val) {
        auto it = U.index.find({kind, ij.first, ij.second, k});
        if (it == U.index.end()) throw std::invalid_argument("cochain pair has a component outside the window");
        x[it->second] = v;
      }
  return x;
}

inline SparseVec restrict_to(const SparseVec& x, const Unknowns& U, const TruncatedGradedAlgebra& A, int level) {
  SparseVec out;
  for (const auto& [j, v] : x)
    if (A.degree(U.key[j][3]) <= level) out.emplace(j, v);
  return out;
}

inline int check_window(const TruncatedGradedAlgebra& A, int window) {
  if (window < 0) return A.window();
  if (window > A.window()) throw std::invalid_argument("window exceeds the truncation of the algebra");
  return window;
}

inline int certified_level(const TruncatedGradedAlgebra& A, int W) { return W - 2 * A.max_generator_degree(); }

struct Quotient {
  long long raw = 0, certified = 0;
  std::vector<SparseVec> basis;
  SparseEchelon boundaries;  // restricted coboundaries
};

inline Quotient quotient(const std::vector<SparseVec>& Z, const std::vector<SparseVec>& B, const Unknowns& U,
                         const TruncatedGradedAlgebra& A, int level) {
  Quotient q;
  SparseEchelon full;
  for (const auto& b : B) full.insert(b);
  std::size_t rb = full.rank();
  for (const auto& z : Z) full.insert(z);
  q.raw = static_cast<long long>(full.rank() - rb);
  for (const auto& b : B) q.boundaries.insert(restrict_to(b, U, A, level));
  SparseEchelon span = q.boundaries;
  for (const auto& z : Z)
    if (span.insert(restrict_to(z, U, A, level))) q.basis.push_back(z);
  q.certified = static_cast<long long>(q.basis.size());
  return q;
}

}  // namespace detail

// Dimension of {z in A_d : {z, A_p} = 0 whenever d + p - 2 <= window}, for d <= window - 2.
inline HpResult hp0(const TruncatedGradedAlgebra& A, int window = -1) {
  int W = detail::check_window(A, window);
  HpResult r;
  r.k = 0;
  r.window = W;
  r.level = W - 2;
  for (int d = 0; d <= W - 2; ++d) {
    SparseEchelon E;
    const auto& src = A.of_degree(d);
    for (std::size_t j = 0; j < A.size(); ++j) {
      if (A.degree(j) + d - 2 > W) continue;
      std::map<std::size_t, SparseVec> rows;
      for (std::size_t c = 0; c < src.size(); ++c)
        for (const auto& [t, v] : *A.br(src[c], j)) rows[t][c] = v;
      for (auto& [t, row] : rows) E.insert(row);
    }
    long long dim = static_cast<long long>(src.size() - E.rank());
    r.degrees.push_back({d, dim, dim});
  }
  return r;
}

// Poisson derivations of degree m modulo Hamiltonian derivations {c, -}, c in A_{m+2}.
inline HpResult hp1(const TruncatedGradedAlgebra& A, int window = -1) {
  int W = detail::check_window(A, window);
  HpResult r;
  r.k = 1;
  r.window = W;
  r.level = detail::certified_level(A, W);
  for (int m = -W; m <= W; ++m) {
    detail::Scope S{&A, m, W};
    auto U = detail::map_unknowns(S);
    if (U.size() == 0) continue;
    auto E = detail::condition_echelon(detail::derivation_conditions(S, detail::unknown_map(S, U)), U.size());
    auto Z = E.kernel(U.size());
    std::vector<SparseVec> B;
    for (auto c : A.of_degree(m + 2)) {
      SparseVec v;
      for (std::size_t j = 0; j < U.size(); ++j) {
        const auto& k = U.key[j];
        const SparseVec* p = A.br(c, k[1]);
        if (!p) continue;
        auto it = p->find(k[3]);
        if (it != p->end()) v[j] = it->second;
      }
      B.push_back(std::move(v));
    }
    auto q = detail::quotient(Z, B, U, A, r.level);
    r.degrees.push_back({m, q.certified, q.raw});
  }
  return r;
}

// First-order Poisson deformations of degree m modulo the coboundaries (-df, delta f).
inline HpResult hp2_first_order(const TruncatedGradedAlgebra& A, int window = -1) {
  int W = detail::check_window(A, window);
  HpResult r;
  r.k = 2;
  r.window = W;
  r.level = detail::certified_level(A, W);
  for (int m = -W; m <= W; ++m) {
    detail::Scope S{&A, m, W};
    auto U = detail::pair_unknowns(S);
    if (U.size() == 0) continue;
    auto E = detail::condition_echelon(detail::pair_conditions(S, detail::unknown_phi(S, U), detail::unknown_psi(S, U)),
                                       U.size());
    auto Z = E.kernel(U.size());
    std::vector<SparseVec> B;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (!S.f_ok(i)) continue;
      for (auto k : A.of_degree(A.degree(i) + m)) {
        std::map<std::size_t, SparseVec> f{{i, SparseVec{{k, Rational(1)}}}};
        B.push_back(detail::coboundary_vector(S, U, detail::known_map(S, f)));
      }
    }
    auto q = detail::quotient(Z, B, U, A, r.level);
    r.degrees.push_back({m, q.certified, q.raw});
    for (const auto& z : q.basis) r.basis.push_back(detail::to_pair(U, z, m));
  }
  return r;
}

// All first-order conditions in scope hold for g.
inline bool is_cocycle(const TruncatedGradedAlgebra& A, const CochainPair& g, int window = -1) {
  int W = detail::check_window(A, window);
  detail::Scope S{&A, g.m, W};
  return detail::pair_conditions(S, detail::known_phi(S, g), detail::known_psi(S, g)).empty();
}

// (-df, delta f) for a degree-m map given on basis elements.
inline CochainPair coboundary(const TruncatedGradedAlgebra& A, const std::map<std::size_t, SparseVec>& f, int m,
                              int window = -1) {
  int W = detail::check_window(A, window);
  detail::Scope S{&A, m, W};
  auto U = detail::pair_unknowns(S);
  return detail::to_pair(U, detail::coboundary_vector(S, U, detail::known_map(S, f)), m);
}

// Representative of the certified class of g: its restriction reduced modulo restricted coboundaries.
inline SparseVec hp2_normal_form(const TruncatedGradedAlgebra& A, const CochainPair& g, int window = -1) {
  int W = detail::check_window(A, window);
  detail::Scope S{&A, g.m, W};
  auto U = detail::pair_unknowns(S);
  int level = detail::certified_level(A, W);
  SparseEchelon Bq;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!S.f_ok(i)) continue;
    for (auto k : A.of_degree(A.degree(i) + g.m)) {
      std::map<std::size_t, SparseVec> f{{i, SparseVec{{k, Rational(1)}}}};
      Bq.insert(detail::restrict_to(detail::coboundary_vector(S, U, detail::known_map(S, f)), U, A, level));
    }
  }
  return Bq.normal_form(detail::restrict_to(detail::from_pair(U, g), U, A, level));
}

struct McExtension {
  bool obstructed = false;
  std::vector<CochainPair> correction;  // order-two terms, one per degree
  std::string residual;                 // first condition with no solution
};

// Order-two term of a deformation over C[e]/e^3 whose first-order term is the sum of the given
// homogeneous cocycles. The equations split by degree; degree w collects outer o inner for m_i + m_j = w.
inline McExtension mc_extend(const TruncatedGradedAlgebra& A, const std::vector<CochainPair>& first, int window = -1) {
  int W = detail::check_window(A, window);
  std::vector<detail::Scope> S1;
  for (const auto& g : first) {
    S1.push_back({&A, g.m, W});
    auto bad = detail::pair_conditions(S1.back(), detail::known_phi(S1.back(), g), detail::known_psi(S1.back(), g));
    if (!bad.empty()) throw InvalidCocycle(detail::describe(A, bad.front()));
  }
  std::map<int, std::vector<detail::Source>> by_weight;
  for (std::size_t i = 0; i < first.size(); ++i)
    for (std::size_t j = 0; j < first.size(); ++j)
      by_weight[first[i].m + first[j].m].push_back({detail::known_phi(S1[i], first[i]), detail::known_psi(S1[i], first[i]),
                                                    detail::known_phi(S1[j], first[j]), detail::known_psi(S1[j], first[j])});
  McExtension out;
  for (const auto& [w, src] : by_weight) {
    detail::Scope S2{&A, w, W};
    auto U = detail::pair_unknowns(S2);
    auto conds = detail::pair_conditions(S2, detail::unknown_phi(S2, U), detail::unknown_psi(S2, U), src);
    SparseEchelon E;
    for (const auto& [row, i] : detail::condition_rows(conds, U.size())) {
      E.insert(row);
      if (out.residual.empty() && E.has_pivot(U.size())) out.residual = detail::describe(A, conds[i]);
    }
    auto x = E.particular(U.size());
    if (!x) {
      out.obstructed = true;
      return out;
    }
    out.correction.push_back(detail::to_pair(U, *x, w));
  }
  return out;
}

inline McExtension mc_extend(const TruncatedGradedAlgebra& A, const CochainPair& g, int window = -1) {
  return mc_extend(A, std::vector<CochainPair>{g}, window);
}

// Order-two conditions hold wherever in scope for first-order term g and order-two term h.
inline bool satisfies_order_two(const TruncatedGradedAlgebra& A, const CochainPair& g, const CochainPair& h,
                                int window = -1) {
  int W = detail::check_window(A, window);
  detail::Scope S1{&A, g.m, W}, S2{&A, h.m, W};
  if (h.m != 2 * g.m) throw std::invalid_argument("order-two term must have twice the degree");
  std::vector<detail::Source> src{{detail::known_phi(S1, g), detail::known_psi(S1, g), detail::known_phi(S1, g),
                                   detail::known_psi(S1, g)}};
  return detail::pair_conditions(S2, detail::known_phi(S2, h), detail::known_psi(S2, h), src).empty();
}

}  // namespace mckaykit
