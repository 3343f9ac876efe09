#include <sstream>

#include "mhg/asymptotics.hpp"
#include "mhg/errors.hpp"
#include "mhg/stirling.hpp"

namespace mhg {

namespace {

PolyQ xpoly(std::initializer_list<Rational> cs) { return PolyQ(std::vector<Rational>(cs)); }

// (X - 1)
PolyQ x_minus_one() { return xpoly({Rational(-1), Rational(1)}); }

// (X - 1)(X d/dX + c) p
PolyQ theta_step(const PolyQ& p, const Rational& c) {
  PolyQ th = p.derivative().shifted(1);  // X p'
  return x_minus_one() * (th + p * c);
}

LPolynomial xpoly_to_lpoly(const PolyQ& p, int n) {
  LPolynomial r;
  for (int e = 0; e <= p.degree(); ++e) r.add_term(n * e, p.coeff(e));
  return r;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw TableInconsistency(msg);
}

}  // namespace

HPolyTable build_h_tables(int n, int mmax) {
  HPolyTable t;
  t.n = n;
  t.mmax = mmax;
  t.H.assign(mmax + 1, {});
  t.H[0] = {PolyQ(Rational(1))};  // H_{0,0} = 1; H_{0,j} = 0 for j > 0
  for (int m = 1; m <= mmax; ++m) {
    t.H[m].assign(m + 1, PolyQ());
    for (int j = 0; j <= m; ++j) {
      PolyQ prev = (j <= m - 1) ? t.H[m - 1][j] : PolyQ();
      PolyQ lower = (j >= 1 && j - 1 <= m - 1) ? t.H[m - 1][j - 1] : PolyQ();
      t.H[m][j] = prev;
      if (!lower.is_zero())
        t.H[m][j] = t.H[m][j] + theta_step(lower, Rational(m - j, n));
    }
  }

  t.Q.assign(mmax + 1, {});
  t.Q[0] = {PolyQ(Rational(1))};  // Q_{0,0} = 1
  for (int j = 1; j <= mmax; ++j) {
    t.Q[j].assign(j + 1, PolyQ());
    for (int k = 1; k <= j; ++k) {
      PolyQ qk = (k <= j - 1) ? t.Q[j - 1][k] : PolyQ();
      PolyQ qk1 = (k - 1 <= j - 1) ? t.Q[j - 1][k - 1] : PolyQ();
      PolyQ inner = qk.derivative().shifted(1);  // X Q'
      inner = inner + (qk * Rational(k) + qk1 * Rational(k + j - 1)) * Rational(1, n);
      t.Q[j][k] = x_minus_one() * inner;
    }
  }

  // Closed forms for j <= 2.
  for (int m = 0; m <= mmax; ++m) {
    require(t.H[m][0] == PolyQ(Rational(1)), "H_{m,0} != 1");
    if (m >= 1) {
      PolyQ expect1 = x_minus_one() * Rational(binomial_z(m, 2)) * Rational(1, n);
      require(t.H[m][1] == expect1, "H_{m,1} closed form");
    }
    if (m >= 2) {
      PolyQ lin = xpoly({Rational(-1), Rational(n + 1)});  // (n+1)X - 1
      PolyQ expect2 = lin * x_minus_one() * Rational(binomial_z(m, 3)) +
                      x_minus_one() * x_minus_one() * Rational(3) * Rational(binomial_z(m, 4));
      expect2 = expect2 * Rational(1, static_cast<long>(n) * n);
      require(t.H[m][2] == expect2, "H_{m,2} closed form");
    }
  }

  // Reconstruction H_{m,j} = sum_k C(m, j+k) Q_{j,k} for j >= 1.
  for (int m = 0; m <= mmax; ++m) {
    for (int j = 1; j <= m; ++j) {
      PolyQ acc;
      for (int k = 1; k <= j; ++k)
        acc = acc + t.Q[j][k] * Rational(binomial_z(m, j + k));
      require(acc == t.H[m][j], "H from Q reconstruction");
    }
  }
  return t;
}

Report check_h_tables(int n, int mmax) {
  try {
    build_h_tables(n, mmax);
  } catch (const TableInconsistency& e) {
    CheckFailure cf;
    cf.expected = "table recursions and closed forms agree";
    cf.actual = e.what();
    return Report::fail("h-tables", n, mmax, std::move(cf));
  }
  return Report::ok("h-tables", n, mmax);
}

LPolynomial LOperator::apply(const LPolynomial& p) const {
  LPolynomial out, cur = p;
  for (size_t i = 0; i < coef.size(); ++i) {
    if (i > 0) cur = apply_D(cur, n);
    out = out + coef[i] * cur;
  }
  return out;
}

std::vector<LOperator> build_l_operators(int n) {
  HPolyTable t = build_h_tables(n, n);
  auto esym = elementary_symmetric_table(n);
  std::vector<LOperator> ops;
  for (int k = 1; k <= n; ++k) {
    LOperator op;
    op.n = n;
    op.k = k;
    op.coef.assign(k + 1, LPolynomial());
    for (int i = 0; i <= k; ++i) {
      PolyQ main = t.H[n - i][k - i] * Rational(binomial_z(n, i));
      PolyQ sub;
      for (int r = 1; r <= k - i; ++r) {
        Rational s = Rational(esym[r]) * Rational(binomial_z(n - r, i)) /
                     Rational(n).pow(r);
        sub = sub + t.H[n - i - r][k - i - r] * s;
      }
      PolyQ c = main - x_minus_one() * sub;
      op.coef[i] = xpoly_to_lpoly(c, n);
    }
    ops.push_back(std::move(op));
  }

  // k = 1: n D - (L^n - 1).
  {
    const LOperator& l1 = ops[0];
    LPolynomial d0;
    d0.add_term(0, Rational(1));
    d0.add_term(n, Rational(-1));
    require(l1.coef[1] == LPolynomial(Rational(n)), "L_1 D-coefficient");
    require(l1.coef[0] == d0, "L_1 constant coefficient");
  }
  // k = 2 when n >= 2.
  if (n >= 2) {
    const LOperator& l2 = ops[1];
    require(l2.coef[2] == LPolynomial(Rational(binomial_z(n, 2))), "L_2 D^2 coefficient");
    LPolynomial xm1;  // L^n - 1
    xm1.add_term(n, Rational(1));
    xm1.add_term(0, Rational(-1));
    require(l2.coef[1] == xm1 * Rational(-3 * (n - 1), 2), "L_2 D coefficient");
    LPolynomial inner = LPolynomial::term(n, Rational((n - 2) * (n - 11), 24));
    inner.add_term(0, Rational(-1));
    require(l2.coef[0] == inner * xm1 * Rational(n - 1, n), "L_2 constant coefficient");
  }
  return ops;
}

std::vector<Report> check_l_operators(int n) {
  std::vector<Report> out;
  try {
    build_l_operators(n);
    out.push_back(Report::ok("l-operators", n, 0));
  } catch (const TableInconsistency& e) {
    CheckFailure cf;
    cf.expected = "L_1, L_2 match their closed forms";
    cf.actual = e.what();
    out.push_back(Report::fail("l-operators", n, 0, std::move(cf)));
  }
  return out;
}

}  // namespace mhg
