#pragma once

#include <string>

#include "mhg/poly_gcd.hpp"
#include "mhg/polynomial.hpp"

namespace mhg {

// Element of Q(w) in canonical form: gcd(num, den) = 1, den monic and
// nonzero; zero is 0/1.  Equality is structural.
class RatFun {
 public:
  RatFun() : num_(), den_(Rational(1)) {}
  RatFun(long v) : num_(Rational(v)), den_(Rational(1)) {}
  RatFun(const Rational& v) : num_(v), den_(Rational(1)) {}
  explicit RatFun(const PolyQ& p) : num_(p), den_(Rational(1)) {}
  RatFun(PolyQ num, PolyQ den);  // normalizes

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  // True when den(0) != 0, i.e. the function is holomorphic at w = 0.
  bool holomorphic_at_zero() const { return !den_.coeff(0).is_zero(); }

  // Order of vanishing of the numerator at w = 0 (0 when num(0) != 0);
  // -1 for the zero function.
  int numerator_valuation_at_zero() const;

  Rational eval(const Rational& w) const;
  Rational eval_at_zero() const;  // requires holomorphic_at_zero

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun inv() const;

  // Multiply by a rational constant (no gcd work needed).
  RatFun scaled(const Rational& s) const;

  // Multiply by the polynomial (w + c) / divide by (w + c).
  RatFun mul_linear(const Rational& c) const;
  RatFun div_linear(const Rational& c) const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string str(const std::string& var = "w") const;

 private:
  struct Reduced {};
  RatFun(PolyQ num, PolyQ den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  PolyQ num_, den_;
};

}  // namespace mhg
