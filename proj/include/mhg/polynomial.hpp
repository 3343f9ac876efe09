#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mhg/errors.hpp"
#include "mhg/rational.hpp"

namespace mhg {

// Dense univariate polynomial over an exact field F, stored by ascending
// degree with no trailing zeros.  degree() of the zero polynomial is -1
// (stands in for the -infinity marker).
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const F& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(int deg, const F& c) {
    Polynomial p;
    if (!c.is_zero()) {
      p.c_.assign(deg + 1, F(0));
      p.c_[deg] = c;
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of x^d; zero beyond the stored degree.
  F coeff(int d) const {
    if (d < 0 || d > degree()) return F(0);
    return c_[d];
  }
  const std::vector<F>& coeffs() const { return c_; }

  F leading() const { return is_zero() ? F(0) : c_.back(); }

  F eval(const F& x) const {
    F r(0);
    for (int d = degree(); d >= 0; --d) r = r * x + c_[d];
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<F> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial shifted(int k) const {  // multiply by x^k
    if (is_zero() || k == 0) return *this;
    std::vector<F> d(c_.size() + k, F(0));
    for (size_t i = 0; i < c_.size(); ++i) d[i + k] = c_[i];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> d(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return Polynomial(std::move(d));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<F> d(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return Polynomial(std::move(d));
  }
  Polynomial operator-() const {
    std::vector<F> d(c_);
    for (auto& x : d) x = -x;
    return Polynomial(std::move(d));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<F> d(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(d));
  }
  friend Polynomial operator*(const Polynomial& a, const F& s) {
    std::vector<F> d(a.c_);
    for (auto& x : d) x = x * s;
    return Polynomial(std::move(d));
  }
  friend Polynomial operator*(const F& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Euclidean division; requires b != 0.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByNonUnit("Polynomial: division by zero");
    Polynomial r = a;
    if (a.degree() < b.degree()) return {Polynomial(), r};
    std::vector<F> q(a.degree() - b.degree() + 1, F(0));
    F binv = F(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      F f = r.leading() * binv;
      q[k] = f;
      std::vector<F> rc = r.c_;
      for (int i = 0; i <= b.degree(); ++i) rc[i + k] -= f * b.c_[i];
      r = Polynomial(std::move(rc));
    }
    return {Polynomial(std::move(q)), r};
  }

  // Exact division; throws if the remainder is nonzero.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DivisionByNonUnit("Polynomial: inexact division");
    return q;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * (F(1) / leading());
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      if (c_[d].is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << c_[d] << ")";
      if (d > 0) os << "*" << var;
      if (d > 1) os << "^" << d;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

using PolyQ = Polynomial<Rational>;

// (w + c) as a polynomial, a recurring building block.
inline PolyQ linear_poly(const Rational& c) {
  return PolyQ(std::vector<Rational>{c, Rational(1)});
}

}  // namespace mhg
