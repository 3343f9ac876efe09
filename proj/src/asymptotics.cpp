#include "mhg/asymptotics.hpp"

#include <sstream>

#include "mhg/errors.hpp"

namespace mhg {

namespace {

// log over Q(w) with the heavy inner products fanned out across threads;
// the outer recurrence stays sequential in d.
XSeries<RatFun> log_series_parallel(const XSeries<RatFun>& f) {
  if (!(f[0] == RatFun(1))) throw BadConstantTerm("log: constant term must be 1");
  const int n = f.order();
  XSeries<RatFun> g(n);
  std::vector<RatFun> terms;
  for (int d = 1; d <= n; ++d) {
    terms.assign(d, RatFun());
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 1; k < d; ++k) terms[k] = (g[k] * f[d - k]).scaled(Rational(k));
    RatFun acc = f[d].scaled(Rational(d));
    for (int k = 1; k < d; ++k) acc -= terms[k];
    g.at(d) = acc.scaled(Rational(1, d));
  }
  return g;
}

Report series_equal_report(const char* check, int n, const XSeries<Rational>& got,
                           const XSeries<Rational>& expect, const std::string& where = "") {
  for (int d = 0; d <= got.order(); ++d) {
    if (got[d] == expect[d]) continue;
    CheckFailure f;
    f.degree = d;
    f.where = where;
    f.expected = expect[d].str();
    f.actual = got[d].str();
    return Report::fail(check, n, got.order(), std::move(f));
  }
  return Report::ok(check, n, got.order());
}

}  // namespace

AsymptoticExpansion expand_log_f(int n, int x_order, int smax) {
  return expand_log_f(build_f(n, x_order), smax);
}

AsymptoticExpansion expand_log_f(const HgSeries& f, int smax) {
  const int order = f.order();
  XSeries<RatFun> lg = log_series_parallel(f.coeff);

  AsymptoticExpansion ae;
  ae.n = f.n;
  ae.x_order = order;
  ae.smax = smax;
  ae.mu = XSeries<Rational>(order);
  ae.mu_parts.assign(smax + 1, XSeries<Rational>(order));

  std::vector<LaurentAtInfinity> exp_d(order + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int d = 1; d <= order; ++d) exp_d[d] = laurent_at_infinity(lg[d], -smax);

  for (int d = 1; d <= order; ++d) {
    const LaurentAtInfinity& e = exp_d[d];
    if (e.top_degree() > 1) {
      std::ostringstream os;
      os << "log F coefficient of x^" << d << " has w-degree " << e.top_degree();
      throw RegularityFailure(os.str(), d);
    }
    ae.mu.at(d) = e.coeff(1);
    for (int j = 0; j <= smax; ++j) ae.mu_parts[j].at(d) = e.coeff(-j);
  }

  // Exponentiate: Phi_0 = e^(mu_0), and with U = sum_{j>=1} mu_j v^j,
  // E = e^U satisfies the triangular recurrence s E_s = sum j mu_j E_{s-j}.
  ae.phi.assign(smax + 1, XSeries<Rational>(order));
  std::vector<XSeries<Rational>> e(smax + 1, XSeries<Rational>(order));
  e[0] = XSeries<Rational>::one(order);
  for (int s = 1; s <= smax; ++s) {
    XSeries<Rational> acc(order);
    for (int j = 1; j <= s; ++j) acc = acc + ae.mu_parts[j] * e[s - j] * Rational(j);
    e[s] = acc * Rational(1, s);
  }
  XSeries<Rational> phi0 = series_exp(ae.mu_parts[0]);
  for (int s = 0; s <= smax; ++s) {
    ae.phi[s] = phi0 * e[s];
    Rational c0 = ae.phi[s][0];
    if (!(c0 == (s == 0 ? Rational(1) : Rational(0))))
      throw RegularityFailure("Phi_s(0) != delta_{0,s}", s);
  }
  return ae;
}

Report check_regularity(int n, int x_order, int smax) {
  return check_regularity(build_f(n, x_order), smax);
}

Report check_regularity(const HgSeries& f, int smax) {
  try {
    expand_log_f(f, smax);
  } catch (const RegularityFailure& e) {
    CheckFailure cf;
    cf.degree = e.degree;
    cf.expected = "w-degree <= 1";
    cf.actual = e.what();
    return Report::fail("regularity", f.n, f.order(), std::move(cf));
  }
  return Report::ok("regularity", f.n, f.order());
}

std::vector<Report> verify_asymptotic_closed_forms(int n, int x_order) {
  return verify_asymptotic_closed_forms(expand_log_f(n, x_order, 1));
}

std::vector<Report> verify_asymptotic_closed_forms(const AsymptoticExpansion& ae) {
  const int n = ae.n;
  const int order = ae.x_order;
  std::vector<Report> out;
  Rational nn = Rational(n).pow(n);
  XSeries<Rational> lser = binomial_power(-nn, Rational(-1, n), order);
  XSeries<Rational> lpow = binomial_power(-nn, Rational(-1), order);  // L^n
  XSeries<Rational> lminus1 = lser - XSeries<Rational>::one(order);

  out.push_back(series_equal_report("mu-closed-form", n, apply_D(ae.mu), lminus1));
  out.push_back(series_equal_report("phi0-closed-form", n, ae.phi[0], lser));
  if (ae.smax >= 1) {
    Rational c = Rational((n - 2) * (n + 1), 24 * n);
    out.push_back(series_equal_report("phi1-closed-form", n, ae.phi[1],
                                      (lser - lpow) * c));
  }
  return out;
}

Report verify_h_log_identity(int n, int order) {
  return verify_h_log_identity(compute_ip_family(n, order));
}

Report verify_h_log_identity(const IpFamily& fam) {
  const int n = fam.n;
  const int order = fam.order;
  // ratios R_p = D(H_p)/H_p; note R_0 = 0.
  std::vector<XSeries<Rational>> ratio(n, XSeries<Rational>(order));
  for (int p = 1; p < n; ++p) ratio[p] = apply_D(fam.H[p]) / fam.H[p];

  XSeries<Rational> sum_sq(order), sum_weighted(order);
  for (int p = 0; p < n; ++p) {
    sum_sq = sum_sq + ratio[p] * ratio[p];
    sum_weighted = sum_weighted + ratio[p] * Rational(p);
  }
  XSeries<Rational> two_l = fam.L * Rational(2);
  XSeries<Rational> lhs = sum_sq / two_l;

  XSeries<Rational> lpow = XSeries<Rational>::one(order);
  for (int i = 0; i < n - 1; ++i) lpow = lpow * fam.L;  // L^(n-1)
  Rational c = Rational((n + 1) * (n - 2), 24);
  XSeries<Rational> inner = lpow * c + sum_weighted / fam.L;
  XSeries<Rational> rhs = -apply_D(inner);

  return series_equal_report("lemma24", n, lhs, rhs);
}

}  // namespace mhg
