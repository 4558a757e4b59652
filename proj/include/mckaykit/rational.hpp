#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mckaykit {

// Exact rational. Values whose numerator and denominator fit in int64 stay
// inline; anything larger lives in an mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : n_(v) {}
  Rational(long v) : n_(v) {}
  Rational(long long v) : n_(v) {}
  Rational(std::int64_t n, std::int64_t d) { set_frac(n, d); }
  explicit Rational(const mpq_class& q) { set_big(q); }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  static Rational parse(std::string_view s) {
    std::string t(s);
    auto slash = t.find('/');
    mpq_class q;
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(t));
    } else {
      mpz_class num(t.substr(0, slash)), den(t.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      q = mpq_class(num, den);
      q.canonicalize();
    }
    return Rational(q);
  }

  bool is_big() const { return static_cast<bool>(big_); }
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
  }
  mpz_class num() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }
  mpz_class den() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }

  // Small parts, valid only when !is_big().
  std::int64_t small_num() const { return n_; }
  std::int64_t small_den() const { return d_; }

  std::string str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    if (n_ == INT64_MIN) return Rational(mpq_class(-to_mpq()));
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    if (n_ == INT64_MIN) return Rational(mpq_class(1 / to_mpq()));
    r.n_ = n_ < 0 ? -d_ : d_;
    r.d_ = n_ < 0 ? -n_ : n_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == 1 && b.d_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.n_, b.n_, &s)) return Rational(s);
      }
      __int128 n = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
      __int128 d = static_cast<__int128>(a.d_) * b.d_;
      return from128(n, d);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == 1 && b.d_ == 1) {
        std::int64_t s;
        if (!__builtin_sub_overflow(a.n_, b.n_, &s)) return Rational(s);
      }
      __int128 n = static_cast<__int128>(a.n_) * b.d_ - static_cast<__int128>(b.n_) * a.d_;
      __int128 d = static_cast<__int128>(a.d_) * b.d_;
      return from128(n, d);
    }
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_ && a.n_ != INT64_MIN && b.n_ != INT64_MIN) {
      if (a.n_ == 0 || b.n_ == 0) return Rational();
      if (a.d_ == 1 && b.d_ == 1) {
        std::int64_t s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &s)) return Rational(s);
      }
      // cross-cancel first so the 128-bit products stay small
      std::int64_t g1 = std::gcd(a.n_, b.d_), g2 = std::gcd(b.n_, a.d_);
      __int128 n = static_cast<__int128>(a.n_ / g1) * (b.n_ / g2);
      __int128 d = static_cast<__int128>(a.d_ / g2) * (b.d_ / g1);
      return from128(n, d, false);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: big values never fit int64
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      __int128 l = static_cast<__int128>(a.n_) * b.d_, r = static_cast<__int128>(b.n_) * a.d_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  std::size_t hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    return std::hash<std::int64_t>{}(n_) * 1000003u ^ std::hash<std::int64_t>{}(d_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::unique_ptr<mpq_class> big_;

  void set_frac(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = from128(n, d);
  }

  void set_big(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      n_ = q.get_num().get_si();
      d_ = q.get_den().get_si();
      big_.reset();
    } else {
      n_ = 0;
      d_ = 1;
      big_ = std::make_unique<mpq_class>(q);
    }
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  static Rational from128(__int128 n, __int128 d, bool reduce = true) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    if (reduce) {
      __int128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
    }
    Rational r;
    if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
      r.n_ = static_cast<std::int64_t>(n);
      r.d_ = static_cast<std::int64_t>(d);
    } else {
      mpq_class q(to_mpz(n), to_mpz(d));
      q.canonicalize();
      r.set_big(q);
    }
    return r;
  }
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace mckaykit
