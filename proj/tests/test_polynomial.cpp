#include "doctest.h"

#include "mhg/poly_gcd.hpp"
#include "mhg/polynomial.hpp"
#include "mhg/stirling.hpp"
#include "support.hpp"

using namespace mhg;

namespace {
PolyQ make(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return PolyQ(std::move(v));
}
}  // namespace

TEST_CASE("degree and trim") {
  CHECK(PolyQ().degree() == -1);
  CHECK(PolyQ().is_zero());
  CHECK(make({1, 0, 0}).degree() == 0);
  CHECK(make({0, 0, 3}).degree() == 2);
}

TEST_CASE("arithmetic and division") {
  PolyQ a = make({-1, 0, 1});  // x^2 - 1
  PolyQ b = make({1, 1});      // x + 1
  auto [q, r] = PolyQ::divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == make({-1, 1}));
  CHECK(a == q * b);
  CHECK(PolyQ::exact_div(a, b) == q);
  CHECK(a.eval(Rational(3)) == Rational(8));
  CHECK(a.derivative() == make({0, 2}));
}

TEST_CASE("gcd: modular agrees with subresultant reference") {
  testsupport::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    PolyQ a = rng.poly(6), b = rng.poly(6), m = rng.poly(3);
    PolyQ am = a * m, bm = b * m;
    if (am.is_zero() && bm.is_zero()) continue;
    PolyQ g1 = poly_gcd_modular(am, bm);
    PolyQ g2 = poly_gcd_subresultant(am, bm);
    CHECK(g1 == g2);
    if (!m.is_zero() && !am.is_zero() && !bm.is_zero()) {
      // m divides the gcd
      auto [q, r] = PolyQ::divmod(g1, m.monic());
      (void)q;
      CHECK(r.is_zero());
    }
  }
}

TEST_CASE("gcd of known factorizations") {
  PolyQ a = make({-1, 0, 1});      // (x-1)(x+1)
  PolyQ b = make({1, 2, 1});       // (x+1)^2
  CHECK(poly_gcd(a, b) == make({1, 1}));
  CHECK(poly_gcd(a, make({3})) == make({1}));
  CHECK(poly_gcd(PolyQ(), b) == b.monic());
  // big coefficients
  PolyQ big = make({1});
  for (int i = 1; i <= 40; ++i) big = big * make({i, 1});
  PolyQ big2 = make({1});
  for (int i = 20; i <= 60; ++i) big2 = big2 * make({i, 1});
  PolyQ g = poly_gcd(big, big2);
  PolyQ expect = make({1});
  for (int i = 20; i <= 40; ++i) expect = expect * make({i, 1});
  CHECK(g == expect.monic());
}

TEST_CASE("stirling tables") {
  auto e = elementary_symmetric_table(4);  // of 1,2,3,4
  CHECK(e[0] == 1);
  CHECK(e[1] == 10);
  CHECK(e[2] == 35);
  CHECK(e[3] == 50);
  CHECK(e[4] == 24);
  // brute force check vs subsets for m <= 8
  for (int m = 1; m <= 8; ++m) {
    auto t = elementary_symmetric_table(m);
    for (int r = 0; r <= m; ++r) {
      // enumerate r-subsets of {1..m}
      mpz_class sum = 0;
      std::vector<int> idx(r);
      for (int i = 0; i < r; ++i) idx[i] = i + 1;
      if (r == 0) {
        sum = 1;
      } else {
        while (true) {
          mpz_class prod = 1;
          for (int v : idx) prod *= v;
          sum += prod;
          int i = r - 1;
          while (i >= 0 && idx[i] == m - (r - 1 - i)) --i;
          if (i < 0) break;
          ++idx[i];
          for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }
      }
      CHECK(t[r] == sum);
    }
  }
  CHECK(stirling_second(5, 2) == 15);
  CHECK(stirling_second(5, 3) == 25);
  CHECK(stirling_second(4, 2) == 7);
  CHECK(stirling_second(0, 0) == 1);
}
