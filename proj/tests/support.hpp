#pragma once

#include <random>

#include "mhg/polynomial.hpp"
#include "mhg/rational.hpp"
#include "mhg/rational_function.hpp"
#include "mhg/xseries.hpp"

namespace mhg::testsupport {

// Deterministic pseudo-random exact values for property tests.
class Rng {
 public:
  explicit Rng(unsigned seed) : eng_(seed) {}

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  Rational rational(long max_abs = 20) {
    long num = integer(-max_abs, max_abs);
    long den = integer(1, max_abs);
    return Rational(num, den);
  }

  Rational nonzero_rational(long max_abs = 20) {
    Rational r = rational(max_abs);
    while (r.is_zero()) r = rational(max_abs);
    return r;
  }

  PolyQ poly(int max_deg, long max_abs = 9) {
    int deg = static_cast<int>(integer(0, max_deg));
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = rational(max_abs);
    return PolyQ(std::move(c));
  }

  PolyQ nonzero_poly(int max_deg, long max_abs = 9) {
    PolyQ p = poly(max_deg, max_abs);
    while (p.is_zero()) p = poly(max_deg, max_abs);
    return p;
  }

  RatFun ratfun(int max_deg = 4, long max_abs = 6) {
    return RatFun(poly(max_deg, max_abs), nonzero_poly(max_deg, max_abs));
  }

  XSeries<Rational> qseries(int order, long max_abs = 9) {
    XSeries<Rational> s(order);
    for (int d = 0; d <= order; ++d) s.at(d) = rational(max_abs);
    return s;
  }

  XSeries<RatFun> wseries(int order, int max_deg = 2, long max_abs = 4) {
    XSeries<RatFun> s(order);
    for (int d = 0; d <= order; ++d) s.at(d) = ratfun(max_deg, max_abs);
    return s;
  }

 private:
  std::mt19937 eng_;
};

}  // namespace mhg::testsupport
