#include "mhg/mirror_checks.hpp"

#include <sstream>

#include "mhg/errors.hpp"
#include "mhg/stirling.hpp"

namespace mhg {

namespace {

// prod_{r=a..b} (n w + r).
PolyQ rising_block(int n, long a, long b) {
  PolyQ p(Rational(1));
  for (long r = a; r <= b; ++r)
    p = p * PolyQ(std::vector<Rational>{Rational(r), Rational(n)});
  return p;
}

PolyQ wpow_minus_shift(int n, long d) {  // (w+d)^n - w^n
  std::vector<Rational> c(n, Rational(0));
  mpz_class dz(d);
  for (int k = 0; k < n; ++k) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), dz.get_mpz_t(), static_cast<unsigned long>(n - k));
    c[k] = Rational(mpz_class(binomial_z(n, k) * t));
  }
  return PolyQ(std::move(c));
}

PolyQ linear_power(const Rational& c, int e) {  // (w + c)^e
  PolyQ p(Rational(1));
  for (int i = 0; i < e; ++i) p = p * linear_poly(c);
  return p;
}

int first_mismatch(const XSeries<RatFun>& a, const XSeries<RatFun>& b) {
  for (int d = 0; d <= a.order(); ++d)
    if (!(a[d] == b[d])) return d;
  return -1;
}

int first_mismatch(const XSeries<Rational>& a, const XSeries<Rational>& b) {
  for (int d = 0; d <= a.order(); ++d)
    if (!(a[d] == b[d])) return d;
  return -1;
}

Report series_equal_report(const char* check, int n, const XSeries<Rational>& got,
                           const XSeries<Rational>& expect, const std::string& where = "") {
  int bad = first_mismatch(got, expect);
  if (bad < 0) return Report::ok(check, n, got.order());
  CheckFailure f;
  f.degree = bad;
  f.where = where;
  f.expected = expect[bad].str();
  f.actual = got[bad].str();
  return Report::fail(check, n, got.order(), std::move(f));
}

// Multiply a series over Q(w) by a series over Q.
XSeries<RatFun> scale_series(const XSeries<Rational>& a, const XSeries<RatFun>& b) {
  return series_mul(lift_to_ratfun(a), b);
}

}  // namespace

Report verify_periodicity(int n, int order) { return verify_periodicity(build_f(n, order)); }

Report verify_periodicity(const HgSeries& f) {
  const int n = f.n;
  HgSeries it = f;
  int minimal_period = 0;
  for (int k = 1; k <= n; ++k) {
    it = apply_mirror_map(it);
    if (minimal_period == 0 && it.coeff == f.coeff) minimal_period = k;
  }
  int bad = first_mismatch(it.coeff, f.coeff);
  if (bad < 0) {
    Report r = Report::ok("periodicity", n, f.order());
    r.details["minimal_period"] = std::to_string(minimal_period);
    return r;
  }
  CheckFailure cf;
  cf.degree = bad;
  cf.expected = f.coeff[bad].str();
  cf.actual = it.coeff[bad].str();
  return Report::fail("periodicity", n, f.order(), std::move(cf));
}

std::vector<Report> verify_i_identities(int n, int order) {
  return verify_i_identities(compute_ip_family(n, order));
}

std::vector<Report> verify_i_identities(const IpFamily& fam) {
  const int n = fam.n;
  const int order = fam.order;
  std::vector<Report> out;
  Rational nn = Rational(n).pow(n);

  // (a) product of all I_p = (1 - n^n x)^(-1).
  XSeries<Rational> prod = XSeries<Rational>::one(order);
  for (int p = 0; p < n; ++p) prod = prod * fam.I[p];
  out.push_back(series_equal_report("i-product", n, prod,
                                    binomial_power(-nn, Rational(-1), order)));

  // (b) prod I_p^(n-1-p) = (1 - n^n x)^(-(n-1)/2); squared form for even n.
  XSeries<Rational> powprod = XSeries<Rational>::one(order);
  for (int p = 0; p < n; ++p)
    for (int e = 0; e < n - 1 - p; ++e) powprod = powprod * fam.I[p];
  if (n % 2 == 1) {
    out.push_back(series_equal_report(
        "i-power-product", n, powprod,
        binomial_power(-nn, Rational(-(n - 1) / 2), order)));
  } else {
    XSeries<Rational> sq = powprod * powprod * binomial_power(-nn, Rational(n - 1), order);
    out.push_back(series_equal_report("i-power-product", n, sq,
                                      XSeries<Rational>::one(order)));
  }

  // (c) reflection I_p = I_{n-1-p}.
  {
    Report r = Report::ok("i-reflection", n, order);
    for (int p = 0; p < n && r.pass; ++p) {
      int bad = first_mismatch(fam.I[p], fam.I[n - 1 - p]);
      if (bad >= 0) {
        CheckFailure f;
        f.degree = bad;
        std::ostringstream os;
        os << "p=" << p;
        f.where = os.str();
        f.expected = fam.I[n - 1 - p][bad].str();
        f.actual = fam.I[p][bad].str();
        r = Report::fail("i-reflection", n, order, std::move(f));
      }
    }
    out.push_back(r);
  }

  // H bookkeeping: H_0 = 1, H_1...H_n = 1, H_{n-p} = H_p^{-1},
  // H_p / H_{p+1} = I_p / L.
  {
    Report r = Report::ok("h-properties", n, order);
    auto fail = [&](const std::string& where, const XSeries<Rational>& got,
                    const XSeries<Rational>& expect) {
      int bad = first_mismatch(got, expect);
      CheckFailure f;
      f.degree = bad;
      f.where = where;
      f.expected = bad >= 0 ? expect[bad].str() : "";
      f.actual = bad >= 0 ? got[bad].str() : "";
      r = Report::fail("h-properties", n, order, std::move(f));
    };
    XSeries<Rational> one = XSeries<Rational>::one(order);
    if (!(fam.H[0] == one)) fail("H_0", fam.H[0], one);
    XSeries<Rational> hprod = one;
    for (int p = 1; p < n; ++p) hprod = hprod * fam.H[p];
    if (r.pass && !(hprod == one)) fail("H_1..H_n", hprod, one);  // H_n = 1
    for (int p = 1; p < n && r.pass; ++p) {
      XSeries<Rational> lhs = fam.H[n - p] * fam.H[p];
      if (!(lhs == one)) fail("H_{n-p}*H_p", lhs, one);
    }
    for (int p = 0; p + 1 < n && r.pass; ++p) {
      XSeries<Rational> lhs = fam.H[p] * fam.L;
      XSeries<Rational> rhs = fam.H[p + 1] * fam.I[p];
      if (!(lhs == rhs)) fail("H_p/H_{p+1}=I_p/L", lhs, rhs);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Report> verify_picard_fuchs(int n, int order) {
  return verify_picard_fuchs(build_f_minus1(n, order), build_f_hat0(n, order));
}

std::vector<Report> verify_picard_fuchs(const HgSeries& f_minus1, const HgSeries& f_hat0) {
  const int n = f_minus1.n;
  const int order = f_minus1.order();
  std::vector<Report> out;

  // (Dw^n - x prod_{j=0..n-1} (n Dw + j)) F_{-1} = w^n F_{-1}
  {
    Report r = Report::ok("picard-fuchs-f", n, order);
    for (int d = 1; d <= order && r.pass; ++d) {
      RatFun lhs = f_minus1.coeff[d] * RatFun(wpow_minus_shift(n, d)) -
                   f_minus1.coeff[d - 1] * RatFun(rising_block(n, n * (d - 1), n * d - 1));
      if (!lhs.is_zero()) {
        CheckFailure f;
        f.degree = d;
        f.expected = "0";
        f.actual = lhs.str();
        r = Report::fail("picard-fuchs-f", n, order, std::move(f));
      }
    }
    out.push_back(r);
  }

  // (Dw^(n-1) - n x prod_{j=1..n-1} (n Dw + j)) Fhat_0 = w^(n-1)
  {
    Report r = Report::ok("picard-fuchs-fhat", n, order);
    for (int d = 1; d <= order && r.pass; ++d) {
      RatFun lhs = f_hat0.coeff[d] * RatFun(linear_power(Rational(d), n - 1)) -
                   f_hat0.coeff[d - 1] * RatFun(rising_block(n, n * (d - 1) + 1, n * d - 1)) *
                       RatFun(Rational(n));
      if (!lhs.is_zero()) {
        CheckFailure f;
        f.degree = d;
        f.expected = "0";
        f.actual = lhs.str();
        r = Report::fail("picard-fuchs-fhat", n, order, std::move(f));
      }
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Report> verify_hat_congruence(int n, int order) {
  return verify_hat_congruence(build_f(n, order), build_f_hat0(n, order),
                               compute_ip_family(n, order));
}

std::vector<Report> verify_hat_congruence(const HgSeries& f, const HgSeries& f_hat0,
                                          const IpFamily& fam) {
  const int n = f.n;
  const int order = f.order();
  std::vector<Report> out;
  Report cong = Report::ok("hat-congruence", n, order);
  Report indep = Report::ok("hat-w-independence", n, order);

  HgSeries fp = f;
  HgSeries fhat = f_hat0;
  for (int p = 0; p <= n - 1; ++p) {
    if (p > 0) {
      fp = apply_mirror_map(fp);
      fhat = apply_mirror_map(fhat);
    }
    // Fhat_p == F_p mod w^(n-p): numerator valuation of the difference.
    for (int d = 0; d <= order && cong.pass; ++d) {
      RatFun diff = fhat.coeff[d] - fp.coeff[d];
      if (diff.is_zero()) continue;
      if (!diff.holomorphic_at_zero() || diff.numerator_valuation_at_zero() < n - p) {
        CheckFailure cf;
        cf.degree = d;
        std::ostringstream os;
        os << "p=" << p;
        cf.where = os.str();
        cf.expected = "divisible by w^" + std::to_string(n - p);
        cf.actual = diff.str();
        cong = Report::fail("hat-congruence", n, order, std::move(cf));
      }
    }
    // I_p = Fhat_p(0, x).
    if (cong.pass) {
      XSeries<Rational> at0 = eval_w0(fhat.coeff);
      int bad = first_mismatch(at0, fam.I[p]);
      if (bad >= 0) {
        CheckFailure cf;
        cf.degree = bad;
        cf.where = "p=" + std::to_string(p);
        cf.expected = fam.I[p][bad].str();
        cf.actual = at0[bad].str();
        cong = Report::fail("hat-congruence", n, order, std::move(cf));
      }
    }
  }
  // At p = n-1 the series is independent of w and equals I_{n-1}.
  for (int d = 0; d <= order && indep.pass; ++d) {
    const RatFun& c = fhat.coeff[d];
    bool constant = c.is_constant();
    if (!constant || !(c == RatFun(fam.I[n - 1][d]))) {
      CheckFailure cf;
      cf.degree = d;
      cf.expected = fam.I[n - 1][d].str();
      cf.actual = c.str();
      indep = Report::fail("hat-w-independence", n, order, std::move(cf));
    }
  }
  out.push_back(std::move(cong));
  out.push_back(std::move(indep));
  return out;
}

std::vector<DescentState> compute_descent(const IpFamily& fam) {
  const int n = fam.n;
  const int order = fam.order;
  Rational nn = Rational(n).pow(n);
  auto esym = elementary_symmetric_table(n - 1);

  std::vector<DescentState> chain;
  DescentState st;
  st.n = n;
  st.p = 0;
  st.coeffs.assign(n, XSeries<Rational>(order));
  // C_s^(0) = C_{s+1} with C_n = 1 - n^n x, C_r = -n^r S_{n-r}(n-1) x.
  for (int s = 0; s + 1 <= n; ++s) {
    int r = s + 1;
    XSeries<Rational> c(order);
    if (r == n) {
      c.at(0) = Rational(1);
      if (order >= 1) c.at(1) = -nn;
    } else {
      if (order >= 1) c.at(1) = -Rational(n).pow(r) * Rational(esym[n - r]);
    }
    st.coeffs[s] = c;
  }
  chain.push_back(st);

  for (int p = 1; p <= n - 1; ++p) {
    const DescentState& prev = chain.back();
    DescentState cur;
    cur.n = n;
    cur.p = p;
    cur.coeffs.assign(n - p, XSeries<Rational>(order));
    // Precompute D^t I_{p-1}.
    std::vector<XSeries<Rational>> dpow(n - p + 1, fam.I[p - 1]);
    for (int t = 1; t <= n - p; ++t) dpow[t] = apply_D(dpow[t - 1]);
    for (int s = 0; s <= n - 1 - p; ++s) {
      XSeries<Rational> acc(order);
      for (int r = s + 1; r <= n - p; ++r) {
        Rational bin = Rational(binomial_z(r, s + 1));
        acc = acc + prev.coeffs[r] * dpow[r - 1 - s] * bin;
      }
      cur.coeffs[s] = acc;
    }
    chain.push_back(std::move(cur));
  }
  return chain;
}

std::vector<Report> verify_descent_closed_forms(int n, int order) {
  IpFamily fam = compute_ip_family(n, order);
  HgSeries f = build_f(n, order);
  HgSeries fm1 = build_f_minus1(n, order);
  return verify_descent_closed_forms(fam, f, fm1);
}

std::vector<Report> verify_descent_closed_forms(const IpFamily& fam, const HgSeries& f,
                                                const HgSeries& f_minus1) {
  const int n = fam.n;
  const int order = fam.order;
  Rational nn = Rational(n).pow(n);
  std::vector<Report> out;
  auto chain = compute_descent(fam);

  XSeries<Rational> one_minus = XSeries<Rational>::one(order);
  if (order >= 1) one_minus.at(1) = -nn;

  // Top coefficient: C^(p)_{n-1-p} = (1 - n^n x) prod_{r<p} I_r.
  {
    Report r = Report::ok("descent-top", n, order);
    XSeries<Rational> prod = XSeries<Rational>::one(order);
    for (int p = 0; p <= n - 1; ++p) {
      if (p > 0) prod = prod * fam.I[p - 1];
      XSeries<Rational> expect = one_minus * prod;
      int bad = first_mismatch(chain[p].coeffs[n - 1 - p], expect);
      if (bad >= 0) {
        CheckFailure cf;
        cf.degree = bad;
        cf.where = "p=" + std::to_string(p) + " s=" + std::to_string(n - 1 - p);
        cf.expected = expect[bad].str();
        cf.actual = chain[p].coeffs[n - 1 - p][bad].str();
        r = Report::fail("descent-top", n, order, std::move(cf));
        break;
      }
    }
    out.push_back(r);
  }

  // Second coefficient: C^(p)_{n-2-p} =
  //   (-n^n (n-1)/2 x + (1 - n^n x) sum_{r<p} (n-r-1) I_r'/I_r) prod_{r<p} I_r.
  {
    Report r = Report::ok("descent-second", n, order);
    XSeries<Rational> prod = XSeries<Rational>::one(order);
    XSeries<Rational> logsum(order);
    for (int p = 0; p <= n - 2; ++p) {
      if (p > 0) {
        prod = prod * fam.I[p - 1];
        logsum = logsum +
                 (apply_D(fam.I[p - 1]) / fam.I[p - 1]) * Rational(n - (p - 1) - 1);
      }
      XSeries<Rational> lin(order);
      if (order >= 1) lin.at(1) = -nn * Rational(n - 1, 2);
      XSeries<Rational> expect = (lin + one_minus * logsum) * prod;
      int bad = first_mismatch(chain[p].coeffs[n - 2 - p], expect);
      if (bad >= 0) {
        CheckFailure cf;
        cf.degree = bad;
        cf.where = "p=" + std::to_string(p) + " s=" + std::to_string(n - 2 - p);
        cf.expected = expect[bad].str();
        cf.actual = chain[p].coeffs[n - 2 - p][bad].str();
        r = Report::fail("descent-second", n, order, std::move(cf));
        break;
      }
    }
    out.push_back(r);
  }

  // (1 - n^n x) I_0 ... I_{n-2} F_{n-1} = F_{-1} over Q(w).
  {
    XSeries<Rational> prod = one_minus;
    for (int p = 0; p <= n - 2; ++p) prod = prod * fam.I[p];
    HgSeries fn1 = apply_mirror_map_iterated(f, n - 1);
    XSeries<RatFun> lhs = scale_series(prod, fn1.coeff);
    int bad = first_mismatch(lhs, f_minus1.coeff);
    if (bad < 0) {
      out.push_back(Report::ok("descent-relation", n, order));
    } else {
      CheckFailure cf;
      cf.degree = bad;
      cf.expected = f_minus1.coeff[bad].str();
      cf.actual = lhs[bad].str();
      out.push_back(Report::fail("descent-relation", n, order, std::move(cf)));
    }
  }
  return out;
}

Report verify_descent_ode_relation(int n, int order) {
  IpFamily fam = compute_ip_family(n, order);
  auto chain = compute_descent(fam);
  HgSeries fm1 = build_f_minus1(n, order);
  HgSeries fp = apply_mirror_map(fm1);  // F_0 = F
  for (int p = 0; p <= n - 1; ++p) {
    if (p > 0) fp = apply_mirror_map(fp);
    // sum_s C_s^(p) Dw^s F_p == w^(n-1-p) F_{-1}
    XSeries<RatFun> acc(order);
    XSeries<RatFun> dws = fp.coeff;
    for (int s = 0; s <= n - 1 - p; ++s) {
      if (s > 0) dws = apply_Dw(dws);
      acc = acc + scale_series(chain[p].coeffs[s], dws);
    }
    RatFun wpow(PolyQ::monomial(n - 1 - p, Rational(1)));
    XSeries<RatFun> rhs = fm1.coeff * wpow;
    int bad = first_mismatch(acc, rhs);
    if (bad >= 0) {
      CheckFailure cf;
      cf.degree = bad;
      cf.where = "p=" + std::to_string(p);
      cf.expected = rhs[bad].str();
      cf.actual = acc[bad].str();
      return Report::fail("descent-ode", n, order, std::move(cf));
    }
  }
  return Report::ok("descent-ode", n, order);
}

}  // namespace mhg
