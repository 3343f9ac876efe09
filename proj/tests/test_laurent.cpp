#include "doctest.h"

#include <map>

#include "mhg/laurent.hpp"
#include "support.hpp"

using namespace mhg;

namespace {
PolyQ make(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return PolyQ(std::move(v));
}
}  // namespace

TEST_CASE("simple expansions") {
  // (w+1)/w = 1 + w^-1
  LaurentAtInfinity a = laurent_at_infinity(RatFun(make({1, 1}), make({0, 1})), -3);
  CHECK(a.top_degree() == 0);
  CHECK(a.coeff(0) == Rational(1));
  CHECK(a.coeff(-1) == Rational(1));
  CHECK(a.coeff(-2) == Rational(0));

  // w^2/(w+1) = w - 1 + w^-1 - w^-2 + ...
  LaurentAtInfinity b = laurent_at_infinity(RatFun(make({0, 0, 1}), make({1, 1})), -4);
  CHECK(b.coeff(1) == Rational(1));
  CHECK(b.coeff(0) == Rational(-1));
  CHECK(b.coeff(-1) == Rational(1));
  CHECK(b.coeff(-2) == Rational(-1));
  CHECK(b.coeff(-3) == Rational(1));

  // constant 5
  LaurentAtInfinity c = laurent_at_infinity(RatFun(5), -2);
  CHECK(c.top_degree() == 0);
  CHECK(c.coeff(0) == Rational(5));
  CHECK(c.coeff(-1) == Rational(0));
}

TEST_CASE("resummation reproduces the numerator above the floor") {
  testsupport::Rng rng(47);
  for (int rep = 0; rep < 120; ++rep) {
    PolyQ num = rng.poly(6), den = rng.nonzero_poly(5);
    if (num.is_zero()) continue;
    int floor = -6;
    LaurentAtInfinity e = laurent_at_infinity(num, den, floor);
    // approx * den must match num for all powers >= deg(den) + floor
    int lo = den.degree() + floor;
    // build approx * den as a Laurent polynomial directly
    std::map<int, Rational> prod;
    for (int j = e.top_degree(); j >= floor; --j) {
      Rational cj = e.coeff(j);
      if (cj.is_zero()) continue;
      for (int i = 0; i <= den.degree(); ++i) {
        prod[j + i] += cj * den.coeff(i);
      }
    }
    for (int t = std::max(lo, num.degree() < lo ? lo : lo); t <= num.degree() + 1; ++t) {
      Rational expect = (t >= 0 && t <= num.degree()) ? num.coeff(t) : Rational(0);
      Rational got = prod.count(t) ? prod[t] : Rational(0);
      if (t >= lo) CHECK(got == expect);
    }
  }
}

TEST_CASE("laurent ring operations track reliable floors") {
  PolyQ w = make({0, 1});
  LaurentAtInfinity a = laurent_at_infinity(RatFun(make({1}), make({1, 1})), -5);  // 1/(w+1)
  LaurentAtInfinity b = laurent_at_infinity(RatFun(make({1}), make({-1, 1})), -5); // 1/(w-1)
  // product = 1/(w^2-1) = w^-2 + w^-4 + ...
  LaurentAtInfinity p = a * b;
  CHECK(p.coeff(-2) == Rational(1));
  CHECK(p.coeff(-3) == Rational(0));
  // floor: a and b have top -1, floor -5 -> product reliable to -6
  CHECK(p.floor() == -6);
  LaurentAtInfinity direct = laurent_at_infinity(RatFun(make({1}), make({-1, 0, 1})), -6);
  CHECK(p.coeff(-4) == direct.coeff(-4));
  CHECK(p.coeff(-6) == direct.coeff(-6));
  // sums
  LaurentAtInfinity s = a + b;  // 2w/(w^2-1)
  LaurentAtInfinity sd = laurent_at_infinity(RatFun(make({0, 2}), make({-1, 0, 1})), -5);
  for (int j = -1; j >= -5; --j) CHECK(s.coeff(j) == sd.coeff(j));
  CHECK_THROWS_AS(p.coeff(-7), OrderMismatch);
}
