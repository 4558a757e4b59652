#pragma once

#include "mckaykit/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckaykit {

// Per-conductor data: Phi_N and the reduction of x^k for 0 <= k < 2N.
struct CycloCtx {
  int N = 1;
  int phi = 1;
  std::vector<long long> cyclo_poly;              // Phi_N, low degree first, monic
  std::vector<std::vector<long long>> pow_table;  // x^k mod Phi_N, length phi each
};

namespace detail {

inline std::vector<long long> poly_divexact(std::vector<long long> num, const std::vector<long long>& den) {
  // den monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  std::vector<long long> q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long long c = num[i];
    q[i - dn] = c;
    if (c != 0)
      for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("inexact cyclotomic division");
  return q;
}

inline std::vector<long long> cyclotomic_poly(int n, std::map<int, std::vector<long long>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divexact(p, cyclotomic_poly(d, memo));
  memo[n] = p;
  return p;
}

inline std::unique_ptr<CycloCtx> make_ctx(int N) {
  static std::map<int, std::vector<long long>> memo;
  auto ctx = std::make_unique<CycloCtx>();
  ctx->N = N;
  ctx->cyclo_poly = cyclotomic_poly(N, memo);
  ctx->phi = static_cast<int>(ctx->cyclo_poly.size()) - 1;
  int phi = ctx->phi;
  int len = std::max(2 * N, 2 * phi);
  ctx->pow_table.assign(len, std::vector<long long>(phi, 0));
  std::vector<long long> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < len; ++k) {
    ctx->pow_table[k] = cur;
    // multiply by x and reduce
    long long top = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < phi; ++j) cur[j] -= top * ctx->cyclo_poly[j];
  }
  return ctx;
}

}  // namespace detail

inline const CycloCtx* cyclo_ctx(int N) {
  if (N < 1) throw std::invalid_argument("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) slot = detail::make_ctx(N);
  return slot.get();
}

// Element of Q(zeta_N) in the power basis zeta^0..zeta^{phi(N)-1}.
class CycloNum {
 public:
  CycloNum() : ctx_(cyclo_ctx(1)), c_(1) {}
  CycloNum(int v) : ctx_(cyclo_ctx(1)), c_{Rational(v)} {}
  CycloNum(const Rational& r) : ctx_(cyclo_ctx(1)), c_{r} {}
  CycloNum(int N, std::vector<Rational> coeffs) : ctx_(cyclo_ctx(N)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) > ctx_->phi) reduce_long();
    c_.resize(ctx_->phi);
  }

  static CycloNum zeta(int N, long long k = 1) {
    const CycloCtx* ctx = cyclo_ctx(N);
    long long e = ((k % N) + N) % N;
    std::vector<Rational> c(ctx->phi);
    for (int j = 0; j < ctx->phi; ++j) c[j] = Rational(ctx->pow_table[e][j]);
    CycloNum z;
    z.ctx_ = ctx;
    z.c_ = std::move(c);
    return z;
  }

  int conductor() const { return ctx_->N; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  const Rational& rational_part() const { return c_[0]; }

  // Embed into Q(zeta_M); requires conductor() | M.
  CycloNum promote(int M) const {
    int N = ctx_->N;
    if (M == N) return *this;
    if (M % N != 0) throw std::invalid_argument("conductor does not divide target");
    const CycloCtx* t = cyclo_ctx(M);
    CycloNum r;
    r.ctx_ = t;
    r.c_.assign(t->phi, Rational());
    int step = M / N;
    for (int k = 0; k < ctx_->phi; ++k) {
      if (c_[k].is_zero()) continue;
      const auto& row = t->pow_table[(k * step) % M];
      for (int j = 0; j < t->phi; ++j)
        if (row[j] != 0) r.c_[j] += c_[k] * Rational(row[j]);
    }
    return r;
  }

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    if (a.ctx_ == b.ctx_) {
      CycloNum r = a;
      for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
      return r;
    }
    int M = std::lcm(a.conductor(), b.conductor());
    return a.promote(M) + b.promote(M);
  }
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    if (a.ctx_ == b.ctx_) {
      CycloNum r = a;
      for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
      return r;
    }
    int M = std::lcm(a.conductor(), b.conductor());
    return a.promote(M) - b.promote(M);
  }
  CycloNum operator-() const {
    CycloNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.ctx_ != b.ctx_) {
      if (b.is_rational()) return a.scaled(b.c_[0]);
      if (a.is_rational()) return b.scaled(a.c_[0]);
      int M = std::lcm(a.conductor(), b.conductor());
      return a.promote(M) * b.promote(M);
    }
    if (a.ctx_->phi == 1) {
      CycloNum r;
      r.ctx_ = a.ctx_;
      r.c_[0] = a.c_[0] * b.c_[0];
      return r;
    }
    int phi = a.ctx_->phi;
    std::vector<Rational> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; j < phi; ++j)
        if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    CycloNum r;
    r.ctx_ = a.ctx_;
    r.c_ = std::move(prod);
    r.reduce_long();
    return r;
  }
  CycloNum scaled(const Rational& s) const {
    CycloNum r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  CycloNum inv() const;

  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }
  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }
  CycloNum& operator/=(const CycloNum& b) { return *this = *this / b; }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
    int M = std::lcm(a.conductor(), b.conductor());
    return a.promote(M).c_ == b.promote(M).c_;
  }

  std::size_t hash() const {
    // conductor-independent only for rationals; group code hashes promoted values
    std::size_t h = static_cast<std::size_t>(ctx_->N);
    for (const auto& x : c_) h = h * 1315423911u ^ x.hash();
    return h;
  }

  std::string str() const {
    if (is_rational()) return c_[0].str();
    std::string s;
    for (int k = 0; k < ctx_->phi; ++k) {
      if (c_[k].is_zero()) continue;
      std::string term = c_[k].str();
      std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
      std::string piece;
      if (k == 0)
        piece = term;
      else if (c_[k].is_one())
        piece = mono;
      else if (c_[k] == Rational(-1))
        piece = "-" + mono;
      else
        piece = "(" + term + ")*" + mono;
      if (!s.empty() && piece[0] != '-') s += "+";
      s += piece;
    }
    return s + " [N=" + std::to_string(ctx_->N) + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const CycloNum& z) { return os << z.str(); }

 private:
  const CycloCtx* ctx_;
  std::vector<Rational> c_;

  // fold coefficients at positions >= phi back into the power basis
  void reduce_long() {
    int phi = ctx_->phi;
    if (static_cast<int>(c_.size()) <= phi) {
      c_.resize(phi);
      return;
    }
    std::vector<Rational> r(c_.begin(), c_.begin() + phi);
    int N = ctx_->N;
    for (std::size_t k = phi; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      const auto& row = ctx_->pow_table[k % N];
      for (int j = 0; j < phi; ++j)
        if (row[j] != 0) r[j] += c_[k] * Rational(row[j]);
    }
    c_ = std::move(r);
  }
};

inline CycloNum CycloNum::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  int phi = ctx_->phi;
  if (phi == 1) return CycloNum(conductor(), {c_[0].inv()});
  // Solve (multiplication by *this) * x = 1 over Q.
  std::vector<std::vector<Rational>> M(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    CycloNum e = CycloNum::zeta(conductor(), j);
    CycloNum col = *this * e;
    for (int i = 0; i < phi; ++i) M[i][j] = col.c_[i];
  }
  M[0][phi] = Rational(1);
  for (int col = 0, row = 0; col < phi; ++col) {
    int p = row;
    while (p < phi && M[p][col].is_zero()) ++p;
    if (p == phi) throw std::logic_error("singular multiplication matrix");
    std::swap(M[p], M[row]);
    Rational iv = M[row][col].inv();
    for (int j = col; j <= phi; ++j) M[row][j] *= iv;
    for (int i = 0; i < phi; ++i) {
      if (i == row || M[i][col].is_zero()) continue;
      Rational f = M[i][col];
      for (int j = col; j <= phi; ++j) M[i][j] -= f * M[row][j];
    }
    ++row;
  }
  std::vector<Rational> x(phi);
  for (int i = 0; i < phi; ++i) x[i] = M[i][phi];
  return CycloNum(conductor(), std::move(x));
}

struct CycloHash {
  std::size_t operator()(const CycloNum& z) const { return z.hash(); }
};

}  // namespace mckaykit
