#pragma once

#include "mckaykit/rational.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace mckaykit::modp {

// Primes just below 2^31; products of two residues fit in 64 bits.
inline std::uint32_t prime(std::size_t i) {
  static const std::uint32_t ps[] = {2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u,
                                     2147483549u, 2147483543u, 2147483497u, 2147483489u, 2147483477u,
                                     2147483423u, 2147483399u, 2147483353u, 2147483323u, 2147483269u,
                                     2147483249u, 2147483237u, 2147483179u, 2147483171u, 2147483137u};
  if (i >= sizeof(ps) / sizeof(ps[0])) throw std::out_of_range("ran out of moduli");
  return ps[i];
}

inline std::uint32_t powmod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}
inline std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

// Reduction of a rational; nullopt when p divides the denominator.
inline std::optional<std::uint32_t> reduce(const Rational& r, std::uint32_t p) {
  if (!r.is_big()) {
    long long n = r.small_num() % static_cast<long long>(p);
    if (n < 0) n += p;
    long long d = r.small_den() % static_cast<long long>(p);
    if (d == 0) return std::nullopt;
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * invmod(static_cast<std::uint32_t>(d), p) % p);
  }
  mpq_class q = r.to_mpq();
  mpz_class pz(p), n = q.get_num() % pz, d = q.get_den() % pz;
  if (n < 0) n += pz;
  if (d == 0) return std::nullopt;
  return static_cast<std::uint32_t>(n.get_ui() * static_cast<std::uint64_t>(invmod(static_cast<std::uint32_t>(d.get_ui()), p)) % p);
}

struct Kernel {
  std::vector<std::size_t> pivots;                 // pivot columns of the row echelon form
  std::vector<std::size_t> free;                   // non-pivot columns
  std::vector<std::vector<std::uint32_t>> basis;   // one vector per free column, that entry = 1
};

// Kernel of a dense rows x cols matrix mod p via reduced row echelon form; destroys the input.
inline Kernel kernel(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  Kernel K;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_row;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i * cols + c]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    std::uint32_t* R = &a[r * cols];
    std::uint64_t inv = invmod(R[c], p);
    for (std::size_t j = c; j < cols; ++j) R[j] = static_cast<std::uint32_t>(R[j] * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t* X = &a[i * cols];
      std::uint64_t f = X[c];
      if (!f) continue;
      std::uint64_t nf = p - f;
      for (std::size_t j = c; j < cols; ++j)
        if (R[j]) X[j] = static_cast<std::uint32_t>((X[j] + nf * R[j]) % p);
    }
    K.pivots.push_back(c);
    pivot_row.push_back(r);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : K.pivots) is_piv[c] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_piv[c]) K.free.push_back(c);
  for (auto f : K.free) {
    std::vector<std::uint32_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < K.pivots.size(); ++k) {
      std::uint32_t x = a[pivot_row[k] * cols + f];
      v[K.pivots[k]] = x ? p - x : 0;
    }
    K.basis.push_back(std::move(v));
  }
  return K;
}

// Wang rational reconstruction of x mod m with |num|, den <= sqrt(m/2).
inline std::optional<Rational> reconstruct(const mpz_class& x, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = x % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class q(r1, t1);
  q.canonicalize();
  return Rational(q);
}

}  // namespace mckaykit::modp
