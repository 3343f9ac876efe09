#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include "mhg/errors.hpp"
#include "mhg/rational.hpp"
#include "mhg/rational_function.hpp"

namespace mhg {

// Truncated power series in x over an exact coefficient ring R: coefficients
// of x^0 .. x^order are stored, arithmetic never reads beyond the stored
// order, and binary operations demand equal orders (use truncated() to
// shorten explicitly).  R needs value semantics, ring operators, is_zero(),
// and construction from long.
template <class R>
class XSeries {
 public:
  XSeries() : order_(0), c_(1, R(0)) {}
  explicit XSeries(int order) : order_(order), c_(order + 1, R(0)) {}
  XSeries(int order, std::vector<R> coeffs) : order_(order), c_(std::move(coeffs)) {
    c_.resize(order + 1, R(0));
  }

  static XSeries constant(int order, const R& c0) {
    XSeries s(order);
    s.c_[0] = c0;
    return s;
  }
  static XSeries one(int order) { return constant(order, R(1)); }

  int order() const { return order_; }
  const R& operator[](int d) const { return c_[d]; }
  R& at(int d) { return c_[d]; }
  const std::vector<R>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  XSeries truncated(int k) const {
    if (k > order_) throw OrderMismatch("XSeries: cannot extend truncation order");
    return XSeries(k, std::vector<R>(c_.begin(), c_.begin() + k + 1));
  }

  template <class Fn>
  auto map(Fn&& fn) const -> XSeries<decltype(fn(std::declval<const R&>(), 0))> {
    using S = decltype(fn(std::declval<const R&>(), 0));
    XSeries<S> r(order_);
    for (int d = 0; d <= order_; ++d) r.at(d) = fn(c_[d], d);
    return r;
  }

  friend XSeries operator+(const XSeries& a, const XSeries& b) {
    check_orders(a, b);
    XSeries r(a.order_);
    for (int d = 0; d <= a.order_; ++d) r.c_[d] = a.c_[d] + b.c_[d];
    return r;
  }
  friend XSeries operator-(const XSeries& a, const XSeries& b) {
    check_orders(a, b);
    XSeries r(a.order_);
    for (int d = 0; d <= a.order_; ++d) r.c_[d] = a.c_[d] - b.c_[d];
    return r;
  }
  XSeries operator-() const {
    XSeries r(order_);
    for (int d = 0; d <= order_; ++d) r.c_[d] = -c_[d];
    return r;
  }
  friend XSeries operator*(const XSeries& a, const XSeries& b) { return series_mul(a, b); }
  friend XSeries operator*(const XSeries& a, const R& s) {
    XSeries r(a.order_);
    for (int d = 0; d <= a.order_; ++d) r.c_[d] = a.c_[d] * s;
    return r;
  }
  friend XSeries operator*(const R& s, const XSeries& a) { return a * s; }
  friend XSeries operator/(const XSeries& a, const XSeries& b) { return series_div(a, b); }

  friend bool operator==(const XSeries& a, const XSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const XSeries& a, const XSeries& b) { return !(a == b); }

  static void check_orders(const XSeries& a, const XSeries& b) {
    if (a.order_ != b.order_)
      throw OrderMismatch("XSeries: operand truncation orders differ");
  }

 private:
  int order_;
  std::vector<R> c_;
};

// Cauchy convolution, straight serial loop.  Kept as the reference
// implementation for the parallel kernel.
template <class R>
XSeries<R> series_mul_serial(const XSeries<R>& a, const XSeries<R>& b) {
  XSeries<R>::check_orders(a, b);
  const int n = a.order();
  XSeries<R> r(n);
  for (int d = 0; d <= n; ++d) {
    R acc(0);
    for (int k = 0; k <= d; ++k) acc += a[k] * b[d - k];
    r.at(d) = acc;
  }
  return r;
}

// Per-coefficient work on Q(w) (polynomial products plus gcd normalization)
// is large enough to amortize a thread team; plain rationals are not.
template <class R>
inline constexpr bool kParallelCoeffs = std::is_same_v<R, RatFun>;

// Cauchy convolution parallelized over output degrees.  Each coefficient is
// an independent dot product evaluated in a fixed order, so the result is
// identical to the serial kernel for any thread count.
template <class R>
XSeries<R> series_mul(const XSeries<R>& a, const XSeries<R>& b) {
  XSeries<R>::check_orders(a, b);
  const int n = a.order();
  if (!kParallelCoeffs<R> || n < 8) return series_mul_serial(a, b);
  XSeries<R> r(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int d = 0; d <= n; ++d) {
    R acc(0);
    for (int k = 0; k <= d; ++k) acc += a[k] * b[d - k];
    r.at(d) = acc;
  }
  return r;
}

// Multiplicative inverse; requires an invertible constant term.
template <class R>
XSeries<R> series_inverse(const XSeries<R>& b) {
  if (b[0].is_zero())
    throw DivisionByNonUnit("series_inverse: constant term is zero");
  const int n = b.order();
  XSeries<R> r(n);
  R c0inv = R(1) / b[0];
  r.at(0) = c0inv;
  for (int d = 1; d <= n; ++d) {
    R acc(0);
    for (int k = 1; k <= d; ++k) acc += b[k] * r[d - k];
    r.at(d) = -acc * c0inv;
  }
  return r;
}

template <class R>
XSeries<R> series_div(const XSeries<R>& a, const XSeries<R>& b) {
  XSeries<R>::check_orders(a, b);
  return series_mul(a, series_inverse(b));
}

// D = x d/dx: multiplies the coefficient of x^d by d.
template <class R>
XSeries<R> apply_D(const XSeries<R>& f) {
  XSeries<R> r(f.order());
  for (int d = 1; d <= f.order(); ++d) r.at(d) = f[d] * R(d);
  return r;
}

template <class R>
XSeries<R> apply_D_iterated(XSeries<R> f, int times) {
  for (int i = 0; i < times; ++i) f = apply_D(f);
  return f;
}

// D-antiderivative with zero constant term (coefficient of x^d divided by d).
inline XSeries<Rational> apply_D_inverse(const XSeries<Rational>& f) {
  XSeries<Rational> r(f.order());
  for (int d = 1; d <= f.order(); ++d) r.at(d) = f[d] / Rational(d);
  return r;
}

// log of a series with constant term 1.
template <class R>
XSeries<R> series_log(const XSeries<R>& f) {
  if (!(f[0] == R(1))) throw BadConstantTerm("series_log: constant term must be 1");
  const int n = f.order();
  XSeries<R> g(n);
  for (int d = 1; d <= n; ++d) {
    R acc = f[d] * R(d);
    for (int k = 1; k < d; ++k) acc -= g[k] * R(k) * f[d - k];
    g.at(d) = acc * (R(1) / R(d));
  }
  return g;
}

// exp of a series with constant term 0.
template <class R>
XSeries<R> series_exp(const XSeries<R>& g) {
  if (!g[0].is_zero()) throw BadConstantTerm("series_exp: constant term must be 0");
  const int n = g.order();
  XSeries<R> h(n);
  h.at(0) = R(1);
  for (int d = 1; d <= n; ++d) {
    R acc(0);
    for (int k = 1; k <= d; ++k) acc += g[k] * R(k) * h[d - k];
    h.at(d) = acc * (R(1) / R(d));
  }
  return h;
}

// (1 + c x)^alpha as a series over Q, by the generalized binomial theorem.
inline XSeries<Rational> binomial_power(const Rational& c, const Rational& alpha, int order) {
  XSeries<Rational> r(order);
  Rational coef(1), cpow(1);
  r.at(0) = Rational(1);
  for (int d = 1; d <= order; ++d) {
    coef *= (alpha - Rational(d - 1)) / Rational(d);
    cpow *= c;
    r.at(d) = coef * cpow;
  }
  return r;
}

// --- operators on series over Q(w) ------------------------------------

// D_w = D + w: multiplies the coefficient of x^d by (w + d).
inline XSeries<RatFun> apply_Dw(const XSeries<RatFun>& f) {
  XSeries<RatFun> r(f.order());
  for (int d = 0; d <= f.order(); ++d) r.at(d) = f[d].mul_linear(Rational(d));
  return r;
}

// Inverse of D_w: divides the coefficient of x^d by (w + d).
inline XSeries<RatFun> apply_Dw_inverse(const XSeries<RatFun>& f) {
  XSeries<RatFun> r(f.order());
  for (int d = 0; d <= f.order(); ++d) r.at(d) = f[d].div_linear(Rational(d));
  return r;
}

inline XSeries<Rational> eval_w0(const XSeries<RatFun>& f) {
  XSeries<Rational> r(f.order());
  for (int d = 0; d <= f.order(); ++d) r.at(d) = f[d].eval_at_zero();
  return r;
}

inline XSeries<RatFun> lift_to_ratfun(const XSeries<Rational>& f) {
  XSeries<RatFun> r(f.order());
  for (int d = 0; d <= f.order(); ++d) r.at(d) = RatFun(f[d]);
  return r;
}

}  // namespace mhg
