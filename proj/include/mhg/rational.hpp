#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <iosfwd>
#include <string>
#include <utility>

#include "mhg/errors.hpp"

namespace mhg {

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1.  Value type over GMP's mpq_class; every
// operation returns a canonical result.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw DivisionByNonUnit("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw DivisionByNonUnit("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByNonUnit("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inv() const {
    if (is_zero()) throw DivisionByNonUnit("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_, NoCanon{});
  }

  Rational pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational r(1), b(*this);
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  // Canonical string: "p" when den == 1, else "p/q".
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
  }

  static Rational from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return Rational(q, NoCanon{});
  }

  const mpq_class& raw() const { return v_; }

 private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

// Binomial coefficient C(a, k) for rational a and integer k >= 0:
// a(a-1)...(a-k+1)/k!.
inline Rational binomial(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= (a - Rational(i)) / Rational(i + 1);
  return r;
}

inline mpz_class binomial_z(long m, long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(k));
  return r;
}

inline mpz_class factorial_z(long m) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

}  // namespace mhg
