#pragma once

#include "mckaykit/deform.hpp"
#include "mckaykit/hochschild.hpp"
#include "mckaykit/linalg.hpp"
#include "mckaykit/mckay.hpp"
#include "mckaykit/molien.hpp"
#include "mckaykit/polyvector.hpp"
#include "mckaykit/spec.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace mckaykit {

struct VerifyReport {
  std::string suite;
  bool pass = true;
  std::size_t checks = 0;
  std::string counterexample;  // first failure only
  nlohmann::json data = nlohmann::json::object();

  VerifyReport() = default;
  explicit VerifyReport(std::string name) : suite(std::move(name)) {}

  void fail(const std::string& what) {
    if (pass) counterexample = what;
    pass = false;
  }
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
  }
};

// Worker count from MCKAYKIT_THREADS, else the hardware concurrency.
inline unsigned thread_budget() {
  if (const char* s = std::getenv("MCKAYKIT_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(0..n-1) on up to thread_budget() workers; results land in index order.
template <class R>
std::vector<R> parallel_cases(std::size_t n, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  std::vector<std::exception_ptr> err(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        err[i] = std::current_exception();
      }
    }
  };
  unsigned k = std::min<std::size_t>(thread_budget(), n);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  return out;
}

inline std::vector<long long> poly_product(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

namespace detail {

inline QPoly random_poly(std::mt19937_64& rng, std::size_t n, int maxdeg) {
  QPoly f(n);
  for (int t = 0; t < 3; ++t) {
    Mono m(n, 0);
    int d = static_cast<int>(rng() % (maxdeg + 1));
    for (int k = 0; k < d; ++k) ++m[rng() % n];
    f.add_term(m, Rational(static_cast<long long>(rng() % 7) - 3));
  }
  return f;
}

inline Polyvector<Rational> random_polyvector(std::mt19937_64& rng, std::size_t n, int k, int maxdeg) {
  Polyvector<Rational> p(n, k);
  for (std::uint32_t S = 0; S < (1u << n); ++S)
    if (std::popcount(S) == k && rng() % 2) p.add(S, random_poly(rng, n, maxdeg));
  return p;
}

inline Rational parity(int e) { return Rational(e % 2 ? -1 : 1); }

inline Cochain random_cochain(std::mt19937_64& rng, std::size_t n, int k) {
  Cochain f(n, k);
  for (auto& x : f.data) x = Rational(static_cast<long long>(rng() % 5) - 2);
  return f;
}

// Structure constants of A in the basis given by the columns of P.
inline FinAlgebra rebased(const FinAlgebra& A, const QMat& P) {
  std::size_t n = A.dim();
  QMat Pi = inverse(P);
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Rational w = P(a, i) * P(b, j);
          if (w.is_zero()) continue;
          for (std::size_t t = 0; t < n; ++t) {
            if (A.c(a, b, t).is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] += w * A.c(a, b, t) * Pi(k, t);
          }
        }
  std::vector<Rational> u(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < n; ++t) u[k] += Pi(k, t) * A.unit()[t];
  return FinAlgebra(n, c, u);
}

inline FinAlgebra random_algebra(std::mt19937_64& rng) {
  std::size_t m = 1 + rng() % 4;
  FinAlgebra A = FinAlgebra::truncated_polynomial(m);
  if (m == 4 && rng() % 2) A = FinAlgebra::tensor(FinAlgebra::truncated_polynomial(2), FinAlgebra::truncated_polynomial(2));
  QMat P(A.dim(), A.dim());
  do {
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) P(i, j) = Rational(static_cast<long long>(rng() % 5) - 2);
  } while (rank(P) < A.dim());
  return rebased(A, P);
}

}  // namespace detail

// V^{gh} = V^g ∩ V^h whenever V^g + V^h = V, over every ordered pair of every catalog group.
inline VerifyReport verify_lemma_easy(unsigned long long max_order, std::size_t cap = 3000000) {
  VerifyReport rep{"lemma-easy"};
  auto specs = catalog_specs(std::min<unsigned long long>(max_order, cap));
  auto scans = parallel_cases<LemmaReport>(specs.size(), [&](std::size_t i) {
    return check_lemma_easy(group_from_spec(specs[i], cap));
  });
  std::size_t applicable = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    rep.checks += scans[i].pairs;
    applicable += scans[i].applicable;
    if (!scans[i].pass)
      rep.fail(specs[i] + " pair (" + std::to_string(scans[i].counterexample->first) + ", " +
               std::to_string(scans[i].counterexample->second) + ")");
  }
  rep.data = {{"groups", specs.size()}, {"pairs", rep.checks}, {"applicable", applicable}};
  return rep;
}

// Unit, commutativity, associativity and grading of gr^F Z(G); graded dims equal orbifold Poincare coefficients.
inline VerifyReport verify_grcenter_axioms(unsigned long long max_order, std::size_t cap = 3000000) {
  VerifyReport rep{"grcenter-axioms"};
  auto specs = catalog_specs(std::min<unsigned long long>(max_order, cap));
  auto results = parallel_cases<VerifyReport>(specs.size(), [&](std::size_t s) {
    VerifyReport r;
    auto G = group_from_spec(specs[s], cap);
    auto gc = gr_center(G);
    std::size_t m = gc.degrees.size();
    std::vector<Rational> c(m * m * m);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * m + j) * m + k]; };
    for (const auto& sc : gc.constants) at(sc.i, sc.j, sc.k) = sc.c;
    std::string tag = specs[s] + ": ";
    r.check(gc.degrees[0] == 0 && G.classes()[0].rep == G.identity(), tag + "class 0 is not the identity");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        r.check(at(0, i, k) == Rational(i == k ? 1 : 0), tag + "unit fails on class " + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          r.checks += 2;
          if (at(i, j, k) != at(j, i, k)) r.fail(tag + "not commutative");
          if (!at(i, j, k).is_zero() && gc.degrees[k] != gc.degrees[i] + gc.degrees[j]) r.fail(tag + "not graded");
          for (std::size_t l = 0; l < m; ++l) {
            Rational lhs, rhs;
            for (std::size_t t = 0; t < m; ++t) {
              lhs += at(i, j, t) * at(t, k, l);
              rhs += at(j, k, t) * at(i, t, l);
            }
            ++r.checks;
            if (lhs != rhs)
              r.fail(tag + "not associative at classes " + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k));
          }
        }
    r.check(gc.poincare == orbifold_poincare(G), tag + "graded dims differ from orbifold Poincare polynomial");
    return r;
  });
  for (const auto& r : results) {
    rep.checks += r.checks;
    if (!r.pass) rep.fail(r.counterexample);
  }
  rep.data = {{"groups", specs.size()}};
  return rep;
}

// Orbifold Poincare polynomial of a blockwise product is the product of the factors' polynomials.
inline VerifyReport verify_kunneth(const std::vector<std::pair<std::string, std::string>>& pairs,
                                   std::size_t cap = 3000000) {
  VerifyReport rep{"kunneth"};
  rep.data["pairs"] = nlohmann::json::array();
  for (const auto& [a, b] : pairs) {
    auto A = group_from_spec(a, cap), B = group_from_spec(b, cap);
    auto lhs = orbifold_poincare(direct_product(A, B, cap));
    auto rhs = poly_product(orbifold_poincare(A), orbifold_poincare(B));
    rep.check(lhs == rhs, a + " x " + b);
    rep.data["pairs"].push_back({{"groups", {a, b}}, {"poincare", lhs}});
  }
  return rep;
}

inline std::vector<std::pair<std::string, std::string>> default_kunneth_pairs() {
  return {{"cyclic:2", "cyclic:3"},      {"cyclic:2", "cyclic:2"},          {"cyclic:3", "cyclic:4"},
          {"cyclic:5", "binary-dihedral:2"}, {"binary-dihedral:2", "binary-dihedral:3"}, {"weyl:A2", "cyclic:2"},
          {"weyl:B2", "cyclic:3"},       {"weyl:G2", "binary-dihedral:2"},  {"symmetric:3", "weyl:A2"},
          {"weyl:A3", "cyclic:2"}};
}

// d o d = 0 on random polyvectors for so(3)* and Darboux brackets; graded skew symmetry and Jacobi on random triples.
inline VerifyReport verify_schouten(std::uint64_t seed, int dd_trials = 100, int jacobi_trials = 50) {
  using PV = Polyvector<Rational>;
  VerifyReport rep{"schouten"};
  std::mt19937_64 rng(seed);
  Bivector<Rational> so3(3);
  so3.set(0, 1, QPoly::var(3, 2));
  so3.set(1, 2, QPoly::var(3, 0));
  so3.set(2, 0, QPoly::var(3, 1));
  for (int t = 0; t < dd_trials; ++t) {
    bool lie = t % 2;
    std::size_t n = lie ? 3 : 4;
    auto B = lie ? so3 : darboux_bivector<Rational>(2);
    PV P = detail::random_polyvector(rng, n, static_cast<int>(rng() % n), 3);
    rep.check(kb_differential(kb_differential(P, B), B).is_zero(), "d o d != 0 on trial " + std::to_string(t));
  }
  for (int t = 0; t < jacobi_trials; ++t) {
    std::size_t n = 2 + rng() % 3;
    int p = std::min<int>(rng() % 4, n), q = std::min<int>(rng() % 4, n), r = std::min<int>(rng() % 4, n);
    PV P = detail::random_polyvector(rng, n, p, 2), Q = detail::random_polyvector(rng, n, q, 2),
       R = detail::random_polyvector(rng, n, r, 2);
    using detail::parity;
    rep.check((schouten_bracket(P, Q) + parity((p - 1) * (q - 1)) * schouten_bracket(Q, P)).is_zero(),
              "graded skew symmetry on trial " + std::to_string(t));
    PV j = parity((p - 1) * (r - 1)) * schouten_bracket(P, schouten_bracket(Q, R)) +
           parity((q - 1) * (p - 1)) * schouten_bracket(Q, schouten_bracket(R, P)) +
           parity((r - 1) * (q - 1)) * schouten_bracket(R, schouten_bracket(P, Q));
    rep.check(j.is_zero(), "graded Jacobi on trial " + std::to_string(t));
  }
  rep.data = {{"d_squared", dd_trials}, {"jacobi", jacobi_trials}};
  return rep;
}

// Graded antisymmetry and Jacobi of the Gerstenhaber bracket and [m,m] = 0 iff associative on random
// algebras; then sh([kappa_A w, f]) = (-1)^{(k-1)q} [w, sh f]_A on Q[x]/x^2 (x) Q[y]/y^2.
inline VerifyReport verify_gerstenhaber(std::uint64_t seed, int algebras = 20, int tau_trials = 50) {
  VerifyReport rep{"gerstenhaber"};
  std::mt19937_64 rng(seed);
  using detail::parity;
  for (int t = 0; t < algebras; ++t) {
    std::string tag = " on algebra " + std::to_string(t);
    FinAlgebra A = detail::random_algebra(rng);
    std::size_t n = A.dim();
    Cochain m = Cochain::multiplication(A);
    rep.check(gerstenhaber_bracket(m, m).is_zero(), "[m,m] != 0 for an associative product" + tag);
    std::vector<Rational> c = A.constants();
    std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
    c[(i * n + j) * n + k] += Rational(1);
    if (i != j) c[(j * n + i) * n + k] += Rational(1);
    FinAlgebra P(n, c, A.unit(), false);
    Cochain mp = Cochain::multiplication(P);
    rep.check(gerstenhaber_bracket(mp, mp).is_zero() == P.is_associative(), "[m,m] = 0 iff associative" + tag);

    int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3), d = static_cast<int>(rng() % 3);
    Cochain f = detail::random_cochain(rng, n, a), g = detail::random_cochain(rng, n, b),
            h = detail::random_cochain(rng, n, d);
    Cochain s = gerstenhaber_bracket(g, f);
    s *= parity((a - 1) * (b - 1));
    s += gerstenhaber_bracket(f, g);
    rep.check(s.is_zero(), "graded antisymmetry" + tag);
    auto term = [&](const Cochain& x, int dx, const Cochain& y, const Cochain& z, int dz) {
      // [y,z] lives in arity -1 when both are 0-cochains, so the term vanishes
      if (y.k + z.k == 0) return Cochain(x.n, x.k + y.k + z.k - 2);
      Cochain r = gerstenhaber_bracket(x, gerstenhaber_bracket(y, z));
      r *= parity((dx - 1) * (dz - 1));
      return r;
    };
    if (a + b + d >= 2) {
      Cochain J = term(f, a, g, h, d);
      J += term(g, b, h, f, a);
      J += term(h, d, f, g, b);
      rep.check(J.is_zero(), "graded Jacobi" + tag);
    }
  }

  auto A = FinAlgebra::truncated_polynomial(2), B = FinAlgebra::truncated_polynomial(2);
  std::vector<Cochain> omegas;
  for (int k = 0; k <= 2; ++k)
    for (std::size_t in = 0; in < ipow(2, k); ++in)
      for (std::size_t o = 0; o < 2; ++o) {
        Cochain w(2, k);
        w.at(in, o) = Rational(1);
        if (is_reduced(w, 0)) omegas.push_back(w);
      }
  for (int t = 0; t < tau_trials; ++t) {
    int l = static_cast<int>(rng() % 4);
    Cochain f = detail::random_cochain(rng, 4, l);
    for (std::size_t wi = 0; wi < omegas.size(); ++wi) {
      const auto& w = omegas[wi];
      Cochain br = gerstenhaber_bracket(kappa_A(w, B, 0), f);
      for (int q = 0; q <= l; ++q) {
        int p = l - q;
        if (p + w.k - 1 < 0) continue;
        BiCochain lhs = shuffle_map(br, A, B, p + w.k - 1, q, 0, 0);
        BiCochain rhs = bracket_A(w, shuffle_map(f, A, B, p, q, 0, 0));
        rhs *= parity((w.k - 1) * q);
        rep.check(lhs == rhs, "shuffle identity fails for omega " + std::to_string(wi) + " trial " + std::to_string(t) +
                                  " (p,q) = (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
    }
  }
  rep.data = {{"algebras", algebras}, {"omegas", omegas.size()}, {"tau_trials", tau_trials}};
  return rep;
}

// ADE type label -> SL(2) subgroup spec and rank; only the A and D series live in the catalog.
inline std::pair<std::string, int> duval_spec(const std::string& type) {
  if (type.size() < 2) throw std::invalid_argument("du Val type is A<n> or D<n>, got '" + type + "'");
  int r = detail::parse_positive(type.substr(1), "rank");
  if (type[0] == 'A') return {"cyclic:" + std::to_string(r + 1), r};
  if (type[0] == 'D' && r >= 4) return {"binary-dihedral:" + std::to_string(r - 2), r};
  throw std::invalid_argument("du Val type is A<n> or D<n> (n >= 4), got '" + type + "'");
}

inline nlohmann::json hp_json(const HpResult& r) {
  nlohmann::json cert = nlohmann::json::array(), raw = nlohmann::json::array();
  for (const auto& d : r.degrees) {
    if (d.dim != 0) cert.push_back({{"m", d.m}, {"dim", d.dim}});
    if (d.raw != d.dim) raw.push_back({{"m", d.m}, {"dim", d.raw}});
  }
  return {{"k", r.k}, {"window", r.window}, {"certified", cert}, {"uncertified", raw}};
}

// HP^1 = 0 and dim HP^2 = rank on the truncated invariant ring of a du Val singularity.
inline VerifyReport verify_hp_duval(const std::string& type, int window, std::size_t cap = 3000000) {
  VerifyReport rep{"hp-duval"};
  auto [spec, r] = duval_spec(type);
  auto A = build_truncated(group_from_spec(spec, cap), window);
  auto h1 = hp1(A), h2 = hp2_first_order(A);
  rep.check(h1.total() == 0, type + ": HP^1 is nonzero");
  rep.check(h2.total() == r, type + ": dim HP^2 = " + std::to_string(h2.total()) + ", expected " + std::to_string(r));
  rep.data = {{"type", type}, {"group", spec}, {"dims", {h1.total(), h2.total()}}, {"hp1", hp_json(h1)},
              {"hp2", hp_json(h2)}};
  return rep;
}

// Molien coefficients equal invariant basis dimensions; Weyl exponents e_i satisfy prod (e_i + 1) = |W|.
inline VerifyReport verify_molien_cross(unsigned long long max_order, int degree, std::size_t cap = 3000000) {
  VerifyReport rep{"molien-cross"};
  auto specs = catalog_specs(std::min<unsigned long long>(max_order, cap));
  auto results = parallel_cases<VerifyReport>(specs.size(), [&](std::size_t s) {
    VerifyReport r;
    auto G = group_from_spec(specs[s], cap);
    auto series = molien(G, static_cast<std::size_t>(degree));
    InvariantRing R(G);
    for (int d = 0; d <= degree; ++d)
      r.check(series[d] == Rational(static_cast<long long>(R.basis(d).size())),
              specs[s] + ": degree " + std::to_string(d) + " Molien coefficient " + series[d].str() +
                  " differs from basis size");
    if (specs[s].rfind("weyl:", 0) == 0) {
      char t = specs[s][5];
      int rk = std::stoi(specs[s].substr(6));
      auto ex = exponents(G, rk, coxeter_number(t, rk));
      unsigned long long prod = 1;
      for (int e : ex) prod *= static_cast<unsigned long long>(e + 1);
      r.check(prod == G.order(), specs[s] + ": product of (exponent + 1) differs from |W|");
    }
    return r;
  });
  for (const auto& r : results) {
    rep.checks += r.checks;
    if (!r.pass) rep.fail(r.counterexample);
  }
  rep.data = {{"groups", specs.size()}, {"degree", degree}};
  return rep;
}

}  // namespace mckaykit
