#pragma once

#include <vector>

#include "mhg/errors.hpp"
#include "mhg/rational.hpp"
#include "mhg/rational_function.hpp"

namespace mhg {

// Taylor jet at w = 0 truncated to w^(m-1): exact coefficients of
// 1, w, ..., w^(m-1).  Used to run the mirror map at fixed w-depth; each
// application of the map costs one order of w, matching the congruence
// depth the descent argument needs.
class WJet {
 public:
  WJet() : c_(1, Rational(0)) {}
  WJet(int m, Rational c0) : c_(m, Rational(0)) { c_[0] = c0; }
  explicit WJet(std::vector<Rational> c) : c_(std::move(c)) {}

  static WJet of_ratfun(const RatFun& f, int m) {
    if (!f.holomorphic_at_zero()) throw NotInP("WJet: coefficient has a pole at w=0");
    // Taylor inverse of the denominator times the numerator.
    std::vector<Rational> den(m, Rational(0)), num(m, Rational(0));
    for (int i = 0; i < m; ++i) {
      den[i] = f.den().coeff(i);
      num[i] = f.num().coeff(i);
    }
    std::vector<Rational> inv(m, Rational(0));
    Rational d0 = den[0].inv();
    inv[0] = d0;
    for (int i = 1; i < m; ++i) {
      Rational acc(0);
      for (int k = 1; k <= i; ++k) acc += den[k] * inv[i - k];
      inv[i] = -acc * d0;
    }
    std::vector<Rational> out(m, Rational(0));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k <= i; ++k) out[i] += num[k] * inv[i - k];
    return WJet(std::move(out));
  }

  int size() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& at(int i) { return c_[i]; }
  Rational value_at_zero() const { return c_[0]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  static void check_sizes(const WJet& a, const WJet& b) {
    if (a.size() != b.size()) throw OrderMismatch("WJet: jet orders differ");
  }

  friend WJet operator+(const WJet& a, const WJet& b) {
    check_sizes(a, b);
    WJet r = a;
    for (int i = 0; i < r.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend WJet operator-(const WJet& a, const WJet& b) {
    check_sizes(a, b);
    WJet r = a;
    for (int i = 0; i < r.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  WJet operator-() const {
    WJet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend WJet operator*(const WJet& a, const WJet& b) {
    check_sizes(a, b);
    int m = a.size();
    WJet r(std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < m; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int k = 0; i + k < m; ++k) r.c_[i + k] += a.c_[i] * b.c_[k];
    }
    return r;
  }
  friend WJet operator*(const WJet& a, const Rational& s) {
    WJet r = a;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  // ((w + d) * jet) / w, dropping to one less w-order; requires the
  // constant term of (w + d) * jet to vanish (d * c0 == 0).
  WJet mirror_coefficient_step(long d) const {
    int m = size();
    Rational dd(d);
    if (!(c_[0] * dd).is_zero())
      throw NotInP("WJet: mirror step constant term does not vanish");
    std::vector<Rational> out(m - 1, Rational(0));
    for (int i = 0; i + 1 < m; ++i) out[i] = dd * c_[i + 1] + c_[i];
    return WJet(std::move(out));
  }

  WJet truncated(int m) const {
    if (m > size()) throw OrderMismatch("WJet: cannot extend jet");
    return WJet(std::vector<Rational>(c_.begin(), c_.begin() + m));
  }

  friend bool operator==(const WJet& a, const WJet& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

}  // namespace mhg
