#include "doctest.h"

#include "mhg/asymptotics.hpp"
#include "support.hpp"

using namespace mhg;

TEST_CASE("regularity holds for n = 1..5") {
  for (int n = 1; n <= 5; ++n) {
    Report r = check_regularity(n, 8, 3);
    CAPTURE(n);
    CHECK(r.pass);
  }
}

TEST_CASE("regularity negative control") {
  HgSeries f = build_f(3, 8);
  // inject a w^2-growth term into the x^3 coefficient
  HgSeries bad = perturb_coefficient(f, 3, RatFun(PolyQ::monomial(2, Rational(1))));
  Report r = check_regularity(bad, 3);
  CHECK(!r.pass);
  CHECK(r.failure->degree == 3);
}

TEST_CASE("mu starts with n^(n-1) x") {
  for (int n : {2, 3, 5}) {
    AsymptoticExpansion ae = expand_log_f(n, 3, 1);
    CHECK(ae.mu[1] == Rational(n).pow(n - 1));
  }
  AsymptoticExpansion ae5 = expand_log_f(5, 2, 0);
  CHECK(ae5.mu[1] == Rational(625));
}

TEST_CASE("closed forms of mu, Phi_0, Phi_1") {
  for (int n = 1; n <= 5; ++n) {
    auto rs = verify_asymptotic_closed_forms(n, 9);
    for (const auto& r : rs) {
      CAPTURE(n);
      CAPTURE(r.check);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("n=2 has vanishing Phi_1 and n=1 vanishing tail") {
  AsymptoticExpansion ae2 = expand_log_f(2, 8, 3);
  CHECK(ae2.phi[1].is_zero());
  AsymptoticExpansion ae1 = expand_log_f(1, 8, 4);
  for (int s = 1; s <= 4; ++s) CHECK(ae1.phi[s].is_zero());
  // n=1: Phi_0 = geometric series
  for (int d = 0; d <= 8; ++d) CHECK(ae1.phi[0][d] == Rational(1));
}

TEST_CASE("closed-form negative control") {
  AsymptoticExpansion ae = expand_log_f(3, 8, 1);
  ae.phi[1].at(4) += Rational(1, 5);
  auto rs = verify_asymptotic_closed_forms(ae);
  CHECK(!rs[2].pass);
  CHECK(rs[2].failure->degree == 4);
}

TEST_CASE("H table closed forms and reconstruction") {
  for (int n = 1; n <= 6; ++n) {
    Report r = check_h_tables(n, 12);
    CAPTURE(n);
    CHECK(r.pass);
  }
  HPolyTable t = build_h_tables(4, 6);
  CHECK(t.H[0][0] == PolyQ(Rational(1)));
  CHECK(t.H[3][0] == PolyQ(Rational(1)));
  // H_{2,1} = (X - 1)/n
  PolyQ expect(std::vector<Rational>{Rational(-1, 4), Rational(1, 4)});
  CHECK(t.H[2][1] == expect);
}

TEST_CASE("L operator closed forms and factorization property") {
  for (int n = 2; n <= 8; ++n) {
    auto rs = check_l_operators(n);
    CAPTURE(n);
    CHECK(rs[0].pass);
  }
  int n = 5;
  auto ops = build_l_operators(n);
  // L_1(L) = 0
  LPolynomial lsym = LPolynomial::term(1, Rational(1));
  CHECK(ops[0].apply(lsym).is_zero());
  // L_1(f) = n L D(L^{-1} f) on random Laurent polynomials
  testsupport::Rng rng(71);
  for (int rep = 0; rep < 60; ++rep) {
    LPolynomial f;
    for (int t = 0; t < 4; ++t)
      f.add_term(static_cast<int>(rng.integer(-5, 8)), rng.rational(9));
    LPolynomial lhs = ops[0].apply(f);
    LPolynomial rhs = apply_D(f.shifted(-1), n).shifted(1) * Rational(n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lemma24 identity") {
  for (int n = 2; n <= 4; ++n) {
    Report r = verify_h_log_identity(n, 10);
    CAPTURE(n);
    CHECK(r.pass);
  }
  // negative control: perturb H_1
  IpFamily fam = compute_ip_family(3, 8);
  fam.H[1].at(2) += Rational(1, 3);
  Report r = verify_h_log_identity(fam);
  CHECK(!r.pass);
}

TEST_CASE("iterate expansions tie the asymptotic route to the H_p family") {
  // (M^p F) ~ e^(mu w) sum_s Phi_{p,s} w^-s with Phi_{p,0} = H_p L and
  // Phi_{p,1} = H_p (Phi_1 + sum_{r<=p} H_r'/H_r).
  for (int n : {3, 4}) {
    int order = 7;
    IpFamily fam = compute_ip_family(n, order);
    Rational nn = Rational(n).pow(n);
    XSeries<Rational> lser = binomial_power(-nn, Rational(-1, n), order);
    XSeries<Rational> phi1 =
        (lser - binomial_power(-nn, Rational(-1), order)) * Rational((n - 2) * (n + 1), 24 * n);
    HgSeries f = build_f(n, order);
    XSeries<Rational> logsum(order);
    for (int p = 1; p < n; ++p) {
      f = apply_mirror_map(f);
      logsum = logsum + apply_D(fam.H[p]) / fam.H[p];
      AsymptoticExpansion ae = expand_log_f(f, 1);
      CAPTURE(n);
      CAPTURE(p);
      CHECK(ae.phi[0] == fam.H[p] * lser);
      CHECK(ae.phi[1] == fam.H[p] * (phi1 + logsum));
    }
  }
}
