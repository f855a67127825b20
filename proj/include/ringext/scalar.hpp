#pragma once

// Exact rational scalar.  Values are kept in lowest terms with positive
// denominator.  The common case lives in two machine words; anything that
// does not fit an int64 after reduction is promoted to a shared immutable
// GMP rational and demoted again as soon as it fits.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace ringext {

namespace detail {

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline unsigned __int128 abs128(__int128 v) {
  return v < 0 ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
}

constexpr long long kMax = 0x7fffffffffffffffLL;

inline mpz_class mpz_from_ll(long long v) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
  return mpz_class((long)v);
}

inline mpz_class mpz_from_u128(unsigned __int128 v) {
  mpz_class z = (unsigned long)(v >> 64);
  z <<= 64;
  z += (unsigned long)(v & 0xffffffffffffffffULL);
  return z;
}

inline mpq_class mpq_from_128(__int128 num, __int128 den) {
  // den > 0
  mpz_class n = mpz_from_u128(abs128(num));
  if (num < 0) n = -n;
  mpq_class q(n, mpz_from_u128((unsigned __int128)den));
  q.canonicalize();
  return q;
}

}  // namespace detail

class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : n_(n) {}
  Scalar(long long n, long long d) { assign128(n, d); }
  explicit Scalar(const mpq_class& q) { assign_mpq(q); }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_big() const { return (bool)big_; }

  // Parses "p" or "p/q".  Returns nullopt on malformed input or q == 0.
  static std::optional<Scalar> parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      num = s.substr(0, slash);
      den = s.substr(slash + 1);
    }
    auto digits_ok = [](const std::string& t, bool sign_ok) {
      if (t.empty()) return false;
      size_t i = 0;
      if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
    mpz_class zn(num), zd(den);
    if (zd == 0) return std::nullopt;
    mpq_class q(zn, zd);
    q.canonicalize();
    Scalar out;
    out.assign_mpq(q);
    return out;
  }

  std::string str() const {
    if (!big_) return std::to_string(n_) + "/" + std::to_string(d_);
    return big_->get_str();  // gmp prints p/q (q omitted when 1)
  }

  // Canonical serialization: always "p/q".
  std::string str_pq() const {
    if (!big_) return std::to_string(n_) + "/" + std::to_string(d_);
    mpq_class q = *big_;
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(detail::mpz_from_ll(n_), detail::mpz_from_ll(d_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
      __int128 n = (__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_;
      __int128 d = (__int128)a.d_ * b.d_;
      Scalar r;
      if (r.try_small(n, d)) return r;
      return Scalar(detail::mpq_from_128(n, d));
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
      __int128 n = (__int128)a.n_ * b.d_ - (__int128)b.n_ * a.d_;
      __int128 d = (__int128)a.d_ * b.d_;
      Scalar r;
      if (r.try_small(n, d)) return r;
      return Scalar(detail::mpq_from_128(n, d));
    }
    return from_mpq(a.to_mpq() - b.to_mpq());
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (!a.big_ && !b.big_) {
      __int128 n = (__int128)a.n_ * b.n_;
      __int128 d = (__int128)a.d_ * b.d_;
      Scalar r;
      if (r.try_small(n, d)) return r;
      return Scalar(detail::mpq_from_128(n, d));
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (!b.big_ && b.n_ == 0) throw std::domain_error("Scalar division by zero");
    if (a.is_zero()) return Scalar();
    if (!a.big_ && !b.big_) {
      __int128 n = (__int128)a.n_ * b.d_;
      __int128 d = (__int128)a.d_ * b.n_;
      if (d < 0) { n = -n; d = -d; }
      Scalar r;
      if (r.try_small(n, d)) return r;
      return Scalar(detail::mpq_from_128(n, d));
    }
    return from_mpq(a.to_mpq() / b.to_mpq());
  }

  Scalar operator-() const {
    if (!big_) {
      Scalar r;
      r.n_ = -n_;
      r.d_ = d_;
      return r;
    }
    return from_mpq(-to_mpq());
  }

  Scalar inv() const { return Scalar(1) / *this; }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return a.to_mpq() == b.to_mpq();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Sign of the value: -1, 0, +1.
  int sgn() const {
    if (!big_) return n_ < 0 ? -1 : n_ > 0 ? 1 : 0;
    return mpq_sgn(big_->get_mpq_t());
  }

  long long num_small() const { return n_; }   // valid only when !is_big()
  long long den_small() const { return d_; }

 private:
  long long n_ = 0, d_ = 1;
  std::shared_ptr<const mpq_class> big_;

  explicit Scalar(mpq_class&& q) { assign_mpq(q); }

  static Scalar from_mpq(const mpq_class& q) {
    Scalar r;
    r.assign_mpq(q);
    return r;
  }

  void assign_mpq(const mpq_class& q) {
    if (mpz_fits_slong_p(q.get_num().get_mpz_t()) &&
        mpz_fits_slong_p(q.get_den().get_mpz_t())) {
      n_ = mpz_get_si(q.get_num().get_mpz_t());
      d_ = mpz_get_si(q.get_den().get_mpz_t());
      big_.reset();
    } else {
      n_ = 0;
      d_ = 1;
      big_ = std::make_shared<const mpq_class>(q);
    }
  }

  void assign128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Scalar with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    if (!try_small(n, d)) *this = Scalar(detail::mpq_from_128(n, d));
  }

  // Reduce n/d (d > 0) and store if it fits int64.
  bool try_small(__int128 n, __int128 d) {
    if (n == 0) {
      n_ = 0;
      d_ = 1;
      big_.reset();
      return true;
    }
    unsigned __int128 g = detail::gcd128(detail::abs128(n), (unsigned __int128)d);
    if (g > 1) {
      n /= (__int128)g;
      d /= (__int128)g;
    }
    if (n > detail::kMax || n < -(__int128)detail::kMax || d > detail::kMax)
      return false;
    n_ = (long long)n;
    d_ = (long long)d;
    big_.reset();
    return true;
  }
};

inline Scalar operator*(long long a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace ringext
