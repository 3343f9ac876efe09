#pragma once

#include <map>
#include <sstream>
#include <string>

#include "mhg/rational.hpp"
#include "mhg/xseries.hpp"

namespace mhg {

// Finite Laurent polynomial in the symbol L over Q, sparse and ordered by
// exponent.  Carrier for the asymptotic coefficients and the operator
// hierarchy; the derivation D acts through D(L^r) = (r/n)(L^(n+r) - L^r).
class LPolynomial {
 public:
  LPolynomial() = default;
  LPolynomial(long v) {
    if (v != 0) t_[0] = Rational(v);
  }
  explicit LPolynomial(const Rational& v) {
    if (!v.is_zero()) t_[0] = v;
  }
  static LPolynomial term(int exp, const Rational& c) {
    LPolynomial p;
    if (!c.is_zero()) p.t_[exp] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<int, Rational>& terms() const { return t_; }

  Rational coeff(int exp) const {
    auto it = t_.find(exp);
    return it == t_.end() ? Rational(0) : it->second;
  }
  int min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
  int max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

  void add_term(int exp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(exp, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend LPolynomial operator+(const LPolynomial& a, const LPolynomial& b) {
    LPolynomial r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }
  friend LPolynomial operator-(const LPolynomial& a, const LPolynomial& b) {
    LPolynomial r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
  }
  LPolynomial operator-() const {
    LPolynomial r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }
  friend LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
    LPolynomial r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend LPolynomial operator*(const LPolynomial& a, const Rational& s) {
    LPolynomial r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.t_) r.t_[e] = c * s;
    return r;
  }
  friend LPolynomial operator*(const Rational& s, const LPolynomial& a) { return a * s; }

  // Multiply by L^k.
  LPolynomial shifted(int k) const {
    LPolynomial r;
    for (const auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }

  friend bool operator==(const LPolynomial& a, const LPolynomial& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LPolynomial& a, const LPolynomial& b) { return !(a == b); }

  // Substitute L -> 1 (the x = 0 value, since L(0) = 1).
  Rational eval_at_one() const {
    Rational r(0);
    for (const auto& [e, c] : t_) r += c;
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      if (!first) os << " + ";
      os << "(" << c << ")";
      if (e != 0) os << "*L^" << e;
      first = false;
    }
    return os.str();
  }

 private:
  std::map<int, Rational> t_;
};

// Derivation D = x d/dx on Laurent polynomials in L = (1 - n^n x)^(-1/n):
// D(L^r) = (r/n) (L^(n+r) - L^r).
inline LPolynomial apply_D(const LPolynomial& p, int n) {
  LPolynomial r;
  for (const auto& [e, c] : p.terms()) {
    Rational f = c * Rational(e, n);
    r.add_term(e + n, f);
    r.add_term(e, -f);
  }
  return r;
}

// Expand a Laurent polynomial in L as a power series in x via
// L^r = (1 - n^n x)^(-r/n).
inline XSeries<Rational> lpoly_to_xseries(const LPolynomial& p, int n, int order) {
  XSeries<Rational> r(order);
  Rational c = -Rational(n).pow(n);
  for (const auto& [e, coef] : p.terms())
    r = r + binomial_power(c, Rational(-e, n), order) * coef;
  return r;
}

}  // namespace mhg
