#include "doctest.h"

#include "mhg/ip_family.hpp"
#include "mhg/mirror_checks.hpp"

using namespace mhg;

TEST_CASE("I_0 matches the closed form (nd)!/(d!)^n") {
  for (int n = 1; n <= 6; ++n) {
    IpFamily fam = compute_ip_family(n, 8);
    for (int d = 0; d <= 8; ++d) {
      mpz_class num = factorial_z(static_cast<long>(n) * d);
      mpz_class den = 1;
      for (int i = 0; i < n; ++i) den *= factorial_z(d);
      CHECK(fam.I[0][d] == Rational(num, den));
    }
  }
  IpFamily fam5 = compute_ip_family(5, 2);
  CHECK(fam5.I[0][1] == Rational(120));
}

TEST_CASE("jets agree with the full Q(w) iterates") {
  int n = 3, order = 6;
  IpFamily fam = compute_ip_family(n, order);
  HgSeries f = build_f(n, order);
  for (int p = 0; p < n; ++p) {
    CHECK(eval_w0(f.coeff) == fam.I[p]);
    if (p + 1 < n) f = apply_mirror_map(f);
  }
}

TEST_CASE("I product identity coefficient for n=3") {
  IpFamily fam = compute_ip_family(3, 4);
  XSeries<Rational> prod = fam.I[0] * fam.I[1] * fam.I[2];
  CHECK(prod[1] == Rational(27));
}

TEST_CASE("periodicity of the I_p sequence") {
  for (int n = 2; n <= 5; ++n) {
    IpFamily fam = compute_ip_family(n, 6, n + 2);
    CHECK(fam.I[n] == fam.I[0]);
    CHECK(fam.I[n + 1] == fam.I[1]);
  }
}

TEST_CASE("identities reports pass, n=1..6") {
  for (int n = 1; n <= 6; ++n) {
    auto rs = verify_i_identities(n, 10);
    for (const auto& r : rs) {
      CAPTURE(r.check);
      CAPTURE(n);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("n=1 product identity reads I_0 = geometric series") {
  IpFamily fam = compute_ip_family(1, 8);
  for (int d = 0; d <= 8; ++d) CHECK(fam.I[0][d] == Rational(1));
}

TEST_CASE("identities negative control") {
  IpFamily fam = compute_ip_family(3, 8);
  fam.I[1].at(3) += Rational(1, 2);
  auto rs = verify_i_identities(fam);
  bool some_fail = false;
  for (const auto& r : rs) some_fail = some_fail || !r.pass;
  CHECK(some_fail);
  CHECK(!rs[0].pass);
  CHECK(rs[0].failure->degree == 3);
}

TEST_CASE("descent closed forms and ODE relation") {
  for (int n = 2; n <= 5; ++n) {
    auto rs = verify_descent_closed_forms(n, 8);
    for (const auto& r : rs) {
      CAPTURE(r.check);
      CAPTURE(n);
      CHECK(r.pass);
    }
    CHECK(verify_descent_ode_relation(n, 6).pass);
  }
}

TEST_CASE("descent initialization matches the Picard-Fuchs coefficients") {
  IpFamily fam = compute_ip_family(4, 6);
  auto chain = compute_descent(fam);
  // C^(0)_{n-1} = 1 - n^n x
  CHECK(chain[0].coeffs[3][0] == Rational(1));
  CHECK(chain[0].coeffs[3][1] == Rational(-256));
  // p=1 top coefficient = (1 - n^n x) I_0
  XSeries<Rational> expect(6);
  expect.at(0) = Rational(1);
  expect.at(1) = Rational(-256);
  expect = expect * fam.I[0];
  CHECK(chain[1].coeffs[2] == expect);
}

TEST_CASE("descent negative control locates the perturbation") {
  IpFamily fam = compute_ip_family(4, 8);
  HgSeries f = build_f(4, 8);
  HgSeries fm1 = build_f_minus1(4, 8);
  fam.I[0].at(2) += Rational(1);
  auto rs = verify_descent_closed_forms(fam, f, fm1);
  bool some_fail = false;
  for (const auto& r : rs) some_fail = some_fail || !r.pass;
  CHECK(some_fail);
}
