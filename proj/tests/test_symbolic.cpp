#include "doctest.h"

#include "mhg/stirling.hpp"
#include "mhg/symbolic.hpp"
#include "support.hpp"

using namespace mhg;

TEST_CASE("faulhaber power sums match brute force") {
  for (int k = 0; k <= 6; ++k) {
    PolyQ p = faulhaber_power_sum(k);
    for (long a = 0; a <= 10; ++a) {
      mpz_class sum = 0;
      for (long i = 1; i <= a; ++i) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), i, k);
        sum += t;
      }
      CHECK(p.eval(Rational(a)) == Rational(sum));
    }
  }
}

TEST_CASE("symbolic elementary symmetric functions") {
  // S_1(a) = a(a+1)/2
  PolyQ s1 = symbolic_elementary_symmetric(1);
  CHECK(s1 == PolyQ(std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 2)}));
  // S_2(3) = 11
  CHECK(symbolic_elementary_symmetric(2).eval(Rational(3)) == Rational(11));
  // specializations match the integer tables, n <= 12, r <= n
  for (int n = 1; n <= 12; ++n) {
    auto table = elementary_symmetric_table(n);
    for (int r = 0; r <= n; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(symbolic_elementary_symmetric(r).eval(Rational(n)) == Rational(table[r]));
    }
  }
}

TEST_CASE("derivation satisfies the Leibniz rule") {
  testsupport::Rng rng(83);
  for (int rep = 0; rep < 1000; ++rep) {
    SymPoly f, g;
    for (int t = 0; t < 2; ++t) {
      f.add_term(static_cast<int>(rng.integer(-3, 3)), static_cast<int>(rng.integer(0, 3)),
                 RatFun(rng.rational(5)));
      g.add_term(static_cast<int>(rng.integer(-3, 3)), static_cast<int>(rng.integer(0, 3)),
                 RatFun(rng.rational(5)));
    }
    SymPoly lhs = (f * g).derivative();
    SymPoly rhs = f.derivative() * g + f * g.derivative();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("derivation specializes to the numeric one") {
  // D(Lam) = Lam(X-1)/a -> D(L) = (1/n)(L^(n+1) - L)
  SymPoly lam = SymPoly::term(1, 0, RatFun(1));
  for (int n = 2; n <= 5; ++n) {
    LPolynomial got = lam.derivative().specialize(n);
    LPolynomial expect = apply_D(LPolynomial::term(1, Rational(1)), n);
    CHECK(got == expect);
  }
}

TEST_CASE("symbolic L operators specialize to the numeric ones") {
  for (int n = 3; n <= 10; ++n) {
    Report r = verify_symbolic_operator_specialization(n, 4);
    CAPTURE(n);
    CHECK(r.pass);
  }
}

TEST_CASE("symbolic phi_1 is ((a-2)(a+1)/24a)(Lam - X)") {
  SymPhiSolution sol = solve_symbolic_phi(1);
  PolyQ num(std::vector<Rational>{Rational(-2), Rational(-1), Rational(1)});  // (a-2)(a+1)
  PolyQ den = PolyQ::monomial(1, Rational(24));
  RatFun c(num, den);
  SymPoly expect = SymPoly::term(1, 0, c) - SymPoly::term(0, 1, c);
  CHECK(sol.phi[1] == expect);
}

TEST_CASE("symbolic phi_3 leading coefficient matches the display") {
  SymPhiSolution sol = solve_symbolic_phi(3);
  // coefficient of Lam^-2 X^3 is (a+1)(a-2)(1003a^4-2366a^3+3759a^2-1676a-164)/(30 (24a)^3)
  PolyQ quart(std::vector<Rational>{Rational(-164), Rational(-1676), Rational(3759),
                                    Rational(-2366), Rational(1003)});
  PolyQ pref(std::vector<Rational>{Rational(-2), Rational(-1), Rational(1)});
  PolyQ den = PolyQ::monomial(3, Rational(30) * Rational(24).pow(3));
  RatFun expect(pref * quart, den);
  CHECK(sol.phi[3].coeff(-2, 3) == expect);
}

TEST_CASE("symbolic phi specializes to numeric phi for n = 3..8, s <= 5") {
  SymPhiSolution sol = solve_symbolic_phi(5);
  for (int n = 3; n <= 8; ++n) {
    Report r = verify_symbolic_specialization(sol, n, 5);
    CAPTURE(n);
    CHECK(r.pass);
  }
}

TEST_CASE("denominator report shows only powers of a") {
  SymPhiSolution sol = solve_symbolic_phi(5);
  DenominatorReport rep = symbolic_denominator_report(sol);
  CHECK(rep.all_powers_of_a);
  CHECK(!rep.entries.empty());
}

TEST_CASE("symbolic negative control") {
  SymPhiSolution sol = solve_symbolic_phi(2);
  sol.phi[2].add_term(0, 1, RatFun(Rational(1, 7)));
  Report r = verify_symbolic_specialization(sol, 4, 2);
  CHECK(!r.pass);
  CHECK(r.failure->where == "s=2");
}
