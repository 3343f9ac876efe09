#include "doctest.h"

#include "mhg/xseries.hpp"
#include "support.hpp"

using namespace mhg;

TEST_CASE("geometric series via division") {
  // (1 - x) into 1 -> sum x^d
  XSeries<Rational> one = XSeries<Rational>::one(10);
  XSeries<Rational> denom(10);
  denom.at(0) = Rational(1);
  denom.at(1) = Rational(-1);
  XSeries<Rational> g = one / denom;
  for (int d = 0; d <= 10; ++d) CHECK(g[d] == Rational(1));
}

TEST_CASE("identity and difference of squares") {
  testsupport::Rng rng(23);
  XSeries<Rational> a = rng.qseries(8);
  CHECK(a * XSeries<Rational>::one(8) == a);
  XSeries<Rational> p(2), m(2);
  p.at(0) = Rational(1);
  p.at(1) = Rational(1);
  m.at(0) = Rational(1);
  m.at(1) = Rational(-1);
  XSeries<Rational> prod = p * m;
  CHECK(prod[0] == Rational(1));
  CHECK(prod[1] == Rational(0));
  CHECK(prod[2] == Rational(-1));
}

TEST_CASE("order discipline") {
  XSeries<Rational> a(3), b(4);
  CHECK_THROWS_AS(a + b, OrderMismatch);
  CHECK_THROWS_AS(a * b, OrderMismatch);
  CHECK(a + b.truncated(3) == a);
  XSeries<Rational> z(3);
  CHECK_THROWS_AS(series_inverse(z), DivisionByNonUnit);
}

TEST_CASE("parallel multiply equals serial reference") {
  testsupport::Rng rng(29);
  for (int rep = 0; rep < 20; ++rep) {
    XSeries<Rational> a = rng.qseries(24), b = rng.qseries(24);
    CHECK(series_mul(a, b) == series_mul_serial(a, b));
  }
  XSeries<RatFun> c = rng.wseries(12), d = rng.wseries(12);
  CHECK(series_mul(c, d) == series_mul_serial(c, d));
}

TEST_CASE("derivations") {
  // D(1 + 3x^2) = 6x^2
  XSeries<Rational> f(4);
  f.at(0) = Rational(1);
  f.at(2) = Rational(3);
  XSeries<Rational> df = apply_D(f);
  CHECK(df[0] == Rational(0));
  CHECK(df[2] == Rational(6));
  // D_w(x) = (w+1) x
  XSeries<RatFun> x(3);
  x.at(1) = RatFun(1);
  XSeries<RatFun> dwx = apply_Dw(x);
  CHECK(dwx[1] == RatFun(linear_poly(Rational(1))));
  CHECK(dwx[0].is_zero());
}

TEST_CASE("Dw inverse round trip") {
  testsupport::Rng rng(31);
  for (int rep = 0; rep < 25; ++rep) {
    XSeries<RatFun> f = rng.wseries(6);
    CHECK(apply_Dw_inverse(apply_Dw(f)) == f);
    CHECK(apply_Dw(apply_Dw_inverse(f)) == f);
  }
}

TEST_CASE("log and exp") {
  CHECK(series_log(XSeries<Rational>::one(6)).is_zero());
  testsupport::Rng rng(37);
  for (int rep = 0; rep < 30; ++rep) {
    XSeries<Rational> f = rng.qseries(8);
    f.at(0) = Rational(1);
    CHECK(series_exp(series_log(f)) == f);
    XSeries<Rational> g = rng.qseries(8);
    g.at(0) = Rational(0);
    CHECK(series_log(series_exp(g)) == g);
  }
  XSeries<Rational> bad(3);
  bad.at(0) = Rational(2);
  CHECK_THROWS_AS(series_log(bad), BadConstantTerm);
  CHECK_THROWS_AS(series_exp(bad), BadConstantTerm);
  // log/exp over Q(w) coefficients
  testsupport::Rng rng2(41);
  XSeries<RatFun> h = rng2.wseries(5, 1, 3);
  h.at(0) = RatFun(1);
  CHECK(series_exp(series_log(h)) == h);
}

TEST_CASE("binomial power") {
  // (1 - 27x)^(-1/3) = 1 + 9x + ... for n = 3
  XSeries<Rational> L = binomial_power(Rational(-27), Rational(-1, 3), 1);
  CHECK(L[0] == Rational(1));
  CHECK(L[1] == Rational(9));
  // integer exponent sanity: (1+x)^3
  XSeries<Rational> c = binomial_power(Rational(1), Rational(3), 4);
  CHECK(c[0] == Rational(1));
  CHECK(c[1] == Rational(3));
  CHECK(c[2] == Rational(3));
  CHECK(c[3] == Rational(1));
  CHECK(c[4] == Rational(0));
  // group law oracle: (1+cx)^a * (1+cx)^b == (1+cx)^(a+b)
  testsupport::Rng rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    Rational cc = rng.nonzero_rational(6);
    Rational a = rng.rational(6), b = rng.rational(6);
    auto lhs = series_mul(binomial_power(cc, a, 8), binomial_power(cc, b, 8));
    CHECK(lhs == binomial_power(cc, a + b, 8));
  }
}
