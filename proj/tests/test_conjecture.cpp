#include "doctest.h"

#include "mhg/asymptotics.hpp"
#include "mhg/conjecture.hpp"

using namespace mhg;

TEST_CASE("laurent log route agrees with the direct Q(w) route") {
  for (int n = 2; n <= 5; ++n) {
    LogLaurentData fast = expand_log_laurent(n, 8, 4);
    AsymptoticExpansion slow = expand_log_f(n, 8, 4);
    CAPTURE(n);
    CHECK(fast.mu == slow.mu);
    for (int j = 0; j <= 4; ++j) CHECK(fast.mu_parts[j] == slow.mu_parts[j]);
  }
}

TEST_CASE("alpha coefficients of (u/2)/sinh(u/2)") {
  auto a = alpha_coefficients(3);
  CHECK(a[0] == Rational(1));
  CHECK(a[1] == Rational(-1, 24));
  CHECK(a[2] == Rational(7, 5760));
  CHECK(a[3] == Rational(-31, 967680));
}

TEST_CASE("e_k polynomials") {
  CHECK(ek_polynomial(1) == PolyQ(std::vector<Rational>{Rational(-1), Rational(1)}));
  CHECK(ek_polynomial(2) ==
        PolyQ(std::vector<Rational>{Rational(0), Rational(-1), Rational(1)}));
  CHECK(ek_polynomial(3) == PolyQ(std::vector<Rational>{Rational(0), Rational(1),
                                                        Rational(-3), Rational(2)}));
}

TEST_CASE("ek generating identity, k <= 7") {
  Report r = verify_ek_identity(7, 12);
  CHECK(r.pass);
}

TEST_CASE("fits: P_0 = 1, P_1 = X - 1, P_3 = 0 and P_2 at n = 5") {
  LogLaurentData data = expand_log_laurent(5, 10, 4);
  PkFit f0 = fit_pk(data, 0);
  CHECK(f0.residual_zero);
  CHECK(f0.coef == std::vector<Rational>{Rational(1)});
  PkFit f1 = fit_pk(data, 1);
  CHECK(f1.residual_zero);
  CHECK(f1.coef == std::vector<Rational>{Rational(-1), Rational(1)});
  PkFit f3 = fit_pk(data, 3);
  CHECK(f3.residual_zero);
  for (const auto& c : f3.coef) CHECK(c.is_zero());
  // P_2(5, X) = -3(X - 1)X = -3X^2 + 3X
  PkFit f2 = fit_pk(data, 2);
  CHECK(f2.residual_zero);
  CHECK(f2.coef == std::vector<Rational>{Rational(0), Rational(3), Rational(-3)});
}

TEST_CASE("residuals vanish for n = 3..10, k <= 6") {
  for (int n = 3; n <= 10; ++n) {
    Report r = verify_pk_residuals(n, 6, 12);
    CAPTURE(n);
    CHECK(r.pass);
  }
}

TEST_CASE("interpolation reproduces the displayed P_k with A and B blocks") {
  std::vector<int> ns;
  for (int n = 3; n <= 14; ++n) ns.push_back(n);
  std::vector<PkInterpolation> interp;
  for (int k = 0; k <= 5; ++k) interp.push_back(interpolate_pk(k, ns, 12));
  CHECK(verify_pk_displays(interp).pass);
  CHECK(verify_pk_leading_terms(interp).pass);
  CHECK(verify_pk_divisibility(interp).pass);
  for (const auto& pk : interp) CHECK(pk.fits_consistent);
}

TEST_CASE("negative controls for the conjecture pipeline") {
  // perturbing the target series breaks the exact fit
  LogLaurentData data = expand_log_laurent(4, 10, 3);
  data.mu_parts[1].at(5) += Rational(1, 11);
  PkFit f2 = fit_pk(data, 2);
  CHECK(!f2.residual_zero);
  // perturbing an interpolated coefficient breaks the display check
  std::vector<int> ns;
  for (int n = 3; n <= 9; ++n) ns.push_back(n);
  std::vector<PkInterpolation> interp{interpolate_pk(2, ns, 10)};
  interp[0].coef_n[1] = interp[0].coef_n[1] + PolyQ(Rational(1));
  CHECK(!verify_pk_displays(interp).pass);
}

TEST_CASE("rank deficiency is reported when the x-order is too small") {
  LogLaurentData data = expand_log_laurent(3, 2, 4);
  CHECK_THROWS_AS(fit_pk(data, 4), RankDeficient);
}
