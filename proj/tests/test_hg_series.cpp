#include "doctest.h"

#include "mhg/hg_series.hpp"
#include "mhg/mirror_checks.hpp"

using namespace mhg;

namespace {
PolyQ make(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return PolyQ(std::move(v));
}
}  // namespace

TEST_CASE("F for n=2 has x-coefficient 2w+2") {
  HgSeries f = build_f(2, 1);
  CHECK(f.coeff[0] == RatFun(1));
  CHECK(f.coeff[1] == RatFun(make({2, 2})));
}

TEST_CASE("constant term is 1 for all kinds") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(build_f(n, 0).coeff[0] == RatFun(1));
    CHECK(build_f_minus1(n, 0).coeff[0] == RatFun(1));
    CHECK(build_f_hat0(n, 0).coeff[0] == RatFun(1));
  }
}

TEST_CASE("w^-1 Dw F_{-1} = F") {
  for (int n = 1; n <= 4; ++n) {
    HgSeries fm1 = build_f_minus1(n, 6);
    HgSeries f = build_f(n, 6);
    HgSeries mapped = apply_mirror_map(fm1);  // F_{-1}(0,x) = 1
    CHECK(mapped.coeff == f.coeff);
  }
}

TEST_CASE("mirror map fixes the constant series") {
  HgSeries one;
  one.n = 3;
  one.coeff = XSeries<RatFun>(5);
  one.coeff.at(0) = RatFun(1);
  HgSeries m = apply_mirror_map(one);
  CHECK(m.coeff == one.coeff);
}

TEST_CASE("n=1: F is a fixed point") {
  HgSeries f = build_f(1, 8);
  CHECK(apply_mirror_map(f).coeff == f.coeff);
}

TEST_CASE("n=2: one mirror step on the x-coefficient") {
  HgSeries f = build_f(2, 1);
  HgSeries m = apply_mirror_map(f);
  CHECK(m.coeff[1] == RatFun(make({2, 2})));
}

TEST_CASE("P-closure after each application") {
  HgSeries f = build_f(3, 6);
  for (int k = 0; k < 4; ++k) {
    f = apply_mirror_map(f);
    CHECK(f.in_p());
  }
}

TEST_CASE("periodicity for small n and perturbation control") {
  for (int n = 1; n <= 5; ++n) {
    Report r = verify_periodicity(n, 8);
    CHECK(r.pass);
  }
  // perturbed series fails at the perturbed degree
  HgSeries f = build_f(3, 8);
  HgSeries bad = perturb_coefficient(f, 4, RatFun(Rational(1, 7)));
  Report r = verify_periodicity(bad);
  CHECK(!r.pass);
  CHECK(r.failure->degree == 4);
}

TEST_CASE("picard-fuchs residuals") {
  for (int n = 1; n <= 5; ++n) {
    auto rs = verify_picard_fuchs(n, 8);
    for (const auto& r : rs) CHECK(r.pass);
  }
  // negative control
  HgSeries fm1 = build_f_minus1(3, 8);
  HgSeries fh = build_f_hat0(3, 8);
  auto rs = verify_picard_fuchs(perturb_coefficient(fm1, 5, RatFun(Rational(1, 3))), fh);
  CHECK(!rs[0].pass);
  CHECK(rs[0].failure->degree == 5);
  CHECK(rs[1].pass);
}

TEST_CASE("hat congruence") {
  for (int n = 2; n <= 4; ++n) {
    auto rs = verify_hat_congruence(n, 8);
    for (const auto& r : rs) CHECK(r.pass);
  }
  // n=4, p=3 w-independence is covered by the second report above
  auto rs = verify_hat_congruence(4, 6);
  CHECK(rs[1].check == "hat-w-independence");
  CHECK(rs[1].pass);
}
