#include "mhg/rational_function.hpp"

#include <sstream>

namespace mhg {

namespace {

// normalize (num, den) with den already coprime to num: make den monic.
void make_monic(PolyQ& num, PolyQ& den) {
  Rational lc = den.leading();
  if (!lc.is_one()) {
    Rational inv = lc.inv();
    num = num * inv;
    den = den * inv;
  }
}

}  // namespace

RatFun::RatFun(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByNonUnit("RatFun: zero denominator");
  if (num_.is_zero()) {
    den_ = PolyQ(Rational(1));
    return;
  }
  PolyQ g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = PolyQ::exact_div(num_, g);
    den_ = PolyQ::exact_div(den_, g);
  }
  make_monic(num_, den_);
}

int RatFun::numerator_valuation_at_zero() const {
  if (num_.is_zero()) return -1;
  int v = 0;
  while (num_.coeff(v).is_zero()) ++v;
  return v;
}

Rational RatFun::eval(const Rational& w) const {
  Rational d = den_.eval(w);
  if (d.is_zero()) throw DivisionByNonUnit("RatFun: pole at evaluation point");
  return num_.eval(w) / d;
}

Rational RatFun::eval_at_zero() const {
  if (!holomorphic_at_zero()) throw DivisionByNonUnit("RatFun: pole at w=0");
  return num_.coeff(0) / den_.coeff(0);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Classic gcd-aware fraction addition keeps intermediate degrees low.
  PolyQ g = poly_gcd(a.den_, b.den_);
  if (g.degree() == 0) {
    PolyQ num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return RatFun();
    PolyQ den = a.den_ * b.den_;
    make_monic(num, den);
    return RatFun(std::move(num), std::move(den), RatFun::Reduced{});
  }
  PolyQ bd = PolyQ::exact_div(b.den_, g);
  PolyQ ad = PolyQ::exact_div(a.den_, g);
  PolyQ num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RatFun();
  PolyQ den = a.den_ * bd;
  PolyQ h = poly_gcd(num, g);  // gcd(num, den) divides g here
  if (h.degree() > 0) {
    num = PolyQ::exact_div(num, h);
    den = PolyQ::exact_div(den, h);
  }
  make_monic(num, den);
  return RatFun(std::move(num), std::move(den), RatFun::Reduced{});
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  PolyQ g1 = poly_gcd(a.num_, b.den_);
  PolyQ g2 = poly_gcd(b.num_, a.den_);
  PolyQ an = g1.degree() > 0 ? PolyQ::exact_div(a.num_, g1) : a.num_;
  PolyQ bd = g1.degree() > 0 ? PolyQ::exact_div(b.den_, g1) : b.den_;
  PolyQ bn = g2.degree() > 0 ? PolyQ::exact_div(b.num_, g2) : b.num_;
  PolyQ ad = g2.degree() > 0 ? PolyQ::exact_div(a.den_, g2) : a.den_;
  PolyQ num = an * bn;
  PolyQ den = ad * bd;
  make_monic(num, den);
  return RatFun(std::move(num), std::move(den), RatFun::Reduced{});
}

RatFun RatFun::inv() const {
  if (is_zero()) throw DivisionByNonUnit("RatFun: inverse of zero");
  PolyQ num = den_, den = num_;
  make_monic(num, den);
  return RatFun(std::move(num), std::move(den), Reduced{});
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

RatFun RatFun::scaled(const Rational& s) const {
  if (s.is_zero() || is_zero()) return RatFun();
  return RatFun(num_ * s, den_, Reduced{});
}

RatFun RatFun::mul_linear(const Rational& c) const {
  if (is_zero()) return *this;
  PolyQ lin = linear_poly(c);
  auto [q, r] = PolyQ::divmod(den_, lin);
  if (r.is_zero()) return RatFun(num_, q, Reduced{});
  return RatFun(num_ * lin, den_, Reduced{});
}

RatFun RatFun::div_linear(const Rational& c) const {
  if (is_zero()) return *this;
  PolyQ lin = linear_poly(c);
  auto [q, r] = PolyQ::divmod(num_, lin);
  if (r.is_zero()) return RatFun(q, den_, Reduced{});
  return RatFun(num_, den_ * lin, Reduced{});
}

std::string RatFun::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  std::ostringstream os;
  os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
  return os.str();
}

}  // namespace mhg
