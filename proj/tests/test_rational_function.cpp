#include "doctest.h"

#include "mhg/rational_function.hpp"
#include "support.hpp"

using namespace mhg;

namespace {
PolyQ make(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return PolyQ(std::move(v));
}
}  // namespace

TEST_CASE("normalization is canonical") {
  // a/b == c/d as fractions iff normalized representations identical
  RatFun a(make({-1, 0, 1}), make({1, 1}));  // (x^2-1)/(x+1) = x-1
  CHECK(a.num() == make({-1, 1}));
  CHECK(a.den() == make({1}));
  RatFun b(make({2, 2}), make({4}));  // (2x+2)/4 = (x+1)/2
  CHECK(b.num() == make({1, 1}) * Rational(1, 2));
  CHECK(b.den() == make({1}));

  testsupport::Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    PolyQ p = rng.poly(4), q = rng.nonzero_poly(4), s = rng.nonzero_poly(3);
    RatFun x(p, q), y(p * s, q * s);
    CHECK(x == y);
  }
}

TEST_CASE("field axioms on random rational functions") {
  testsupport::Rng rng(13);
  for (int i = 0; i < 260; ++i) {
    RatFun a = rng.ratfun(3), b = rng.ratfun(3), c = rng.ratfun(3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFun());
    if (!a.is_zero()) CHECK(a * a.inv() == RatFun(1));
  }
}

TEST_CASE("smart add agrees with naive construction") {
  testsupport::Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    RatFun a = rng.ratfun(4), b = rng.ratfun(4);
    RatFun sum = a + b;
    RatFun naive(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
    CHECK(sum == naive);
    RatFun prod = a * b;
    RatFun naive_prod(a.num() * b.num(), a.den() * b.den());
    CHECK(prod == naive_prod);
  }
}

TEST_CASE("linear multiply and divide") {
  RatFun f(make({1}), make({0, 1}));  // 1/w
  RatFun g = f.mul_linear(Rational(0));
  CHECK(g == RatFun(1));
  RatFun h = RatFun(make({0, 1})).div_linear(Rational(0));  // w/w
  CHECK(h == RatFun(1));
  RatFun k = RatFun(1).div_linear(Rational(2));
  CHECK(k == RatFun(make({1}), make({2, 1})));
  testsupport::Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    RatFun a = rng.ratfun(3);
    Rational c = rng.rational(5);
    CHECK(a.mul_linear(c) == a * RatFun(linear_poly(c)));
    CHECK(a.div_linear(c) == a / RatFun(linear_poly(c)));
    CHECK(a.mul_linear(c).div_linear(c) == a);
  }
}

TEST_CASE("holomorphy and evaluation at zero") {
  RatFun f(make({1, 2}), make({1, 1}));
  CHECK(f.holomorphic_at_zero());
  CHECK(f.eval_at_zero() == Rational(1));
  RatFun g(make({1}), make({0, 1}));
  CHECK(!g.holomorphic_at_zero());
  RatFun h(make({0, 0, 3}), make({1, 1}));
  CHECK(h.numerator_valuation_at_zero() == 2);
}
