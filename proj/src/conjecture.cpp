#include "mhg/conjecture.hpp"

#include <sstream>

#include "mhg/errors.hpp"
#include "mhg/linsolve.hpp"
#include "mhg/stirling.hpp"

namespace mhg {

namespace {

// Unreduced numerator/denominator of the x^d coefficient of F, expanded at
// w = infinity.  No gcd work: the Laurent division does not need reduced
// fractions.
std::vector<LaurentAtInfinity> f_coefficients_at_infinity(int n, int x_order, int floor) {
  std::vector<LaurentAtInfinity> out(x_order + 1);
  out[0] = LaurentAtInfinity(Rational(1));
  PolyQ num(Rational(1)), den(Rational(1));
  for (long d = 1; d <= x_order; ++d) {
    for (long r = n * (d - 1) + 1; r <= n * d; ++r)
      num = num * PolyQ(std::vector<Rational>{Rational(r), Rational(n)});
    // (w + d)^n - w^n
    std::vector<Rational> c(n, Rational(0));
    mpz_class dz(d);
    for (int k = 0; k < n; ++k) {
      mpz_class t;
      mpz_pow_ui(t.get_mpz_t(), dz.get_mpz_t(), static_cast<unsigned long>(n - k));
      c[k] = Rational(mpz_class(binomial_z(n, k) * t));
    }
    den = den * PolyQ(std::move(c));
    out[d] = laurent_at_infinity(num, den, floor);
  }
  return out;
}

Rational nth_power(int n) { return Rational(n).pow(n); }

}  // namespace

LogLaurentData expand_log_laurent(int n, int x_order, int smax) {
  const int floor = -(smax + x_order);
  auto f = f_coefficients_at_infinity(n, x_order, floor);

  // log recurrence: d g_d = d f_d - sum_{k<d} k g_k f_{d-k}.
  std::vector<LaurentAtInfinity> g(x_order + 1);
  for (int d = 1; d <= x_order; ++d) {
    LaurentAtInfinity acc = f[d] * Rational(d);
    for (int k = 1; k < d; ++k) acc -= (g[k] * f[d - k]) * Rational(k);
    g[d] = acc * Rational(1, d);
    if (!g[d].is_zero() && g[d].top_degree() > 1) {
      std::ostringstream os;
      os << "log F coefficient of x^" << d << " has w-degree " << g[d].top_degree();
      throw RegularityFailure(os.str(), d);
    }
  }

  LogLaurentData data;
  data.n = n;
  data.x_order = x_order;
  data.smax = smax;
  data.mu = XSeries<Rational>(x_order);
  data.mu_parts.assign(smax + 1, XSeries<Rational>(x_order));
  for (int d = 1; d <= x_order; ++d) {
    data.mu.at(d) = g[d].coeff(1);
    for (int j = 0; j <= smax; ++j) data.mu_parts[j].at(d) = g[d].coeff(-j);
  }
  return data;
}

PkFit fit_pk(const LogLaurentData& data, int k) {
  const int n = data.n;
  const int order = data.x_order;
  if (k > data.smax + 1) throw std::invalid_argument("fit_pk: k beyond stored smax");

  // G_k = w^-k coefficient of 1 + (x/w) d/dx log F.
  XSeries<Rational> gk =
      (k == 0) ? XSeries<Rational>::one(order) + apply_D(data.mu)
               : apply_D(data.mu_parts[k - 1]);
  // Target: n^k G_k L^(k-1) should be a degree-<=k polynomial in X = L^n.
  XSeries<Rational> target =
      gk * binomial_power(-nth_power(n), Rational(-(k - 1), n), order) * Rational(n).pow(k);

  std::vector<std::vector<Rational>> a(order + 1, std::vector<Rational>(k + 1));
  std::vector<Rational> b(order + 1);
  for (int j = 0; j <= k; ++j) {
    XSeries<Rational> col = binomial_power(-nth_power(n), Rational(-j), order);
    for (int d = 0; d <= order; ++d) a[d][j] = col[d];
  }
  for (int d = 0; d <= order; ++d) b[d] = target[d];
  auto res = solve_linear_system(std::move(a), std::move(b));
  if (res.rank < k + 1) throw RankDeficient("fit_pk: x-order too small for k");

  PkFit fit;
  fit.n = n;
  fit.k = k;
  fit.x_order = order;
  fit.coef = res.solution;
  fit.residual_zero = res.consistent;
  return fit;
}

std::vector<PkFit> fit_pk_all(int n, int kmax, int x_order) {
  LogLaurentData data = expand_log_laurent(n, x_order, std::max(0, kmax - 1));
  std::vector<PkFit> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(fit_pk(data, k));
  return out;
}

namespace {

PolyQ lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  PolyQ acc;
  for (size_t i = 0; i < pts.size(); ++i) {
    PolyQ basis(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      basis = basis * PolyQ(std::vector<Rational>{-pts[j].first, Rational(1)});
      denom *= pts[i].first - pts[j].first;
    }
    acc = acc + basis * (pts[i].second / denom);
  }
  return acc;
}

PolyQ poly_in_n(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return PolyQ(std::move(v));
}

}  // namespace

PkInterpolation interpolate_pk(int k, const std::vector<int>& ns, int x_order) {
  if (ns.size() < 2) throw std::invalid_argument("interpolate_pk: need at least two nodes");
  std::vector<PkFit> fits;
  fits.reserve(ns.size());
  bool consistent = true;
#pragma omp parallel for schedule(dynamic, 1) ordered
  for (size_t i = 0; i < ns.size(); ++i) {
    LogLaurentData data = expand_log_laurent(ns[i], x_order, std::max(0, k - 1));
    PkFit fit = fit_pk(data, k);
#pragma omp ordered
    {
      fits.push_back(std::move(fit));
    }
  }
  for (const auto& f : fits) consistent = consistent && f.residual_zero;

  PkInterpolation interp;
  interp.k = k;
  interp.fits_consistent = consistent;
  interp.stable = true;
  for (int j = 0; j <= k; ++j) {
    std::vector<std::pair<Rational, Rational>> pts, pts_minus;
    for (size_t i = 0; i < ns.size(); ++i) {
      pts.emplace_back(Rational(ns[i]), fits[i].coef[j]);
      if (i + 1 < ns.size()) pts_minus.emplace_back(Rational(ns[i]), fits[i].coef[j]);
    }
    PolyQ full = lagrange_interpolate(pts);
    PolyQ partial = lagrange_interpolate(pts_minus);
    if (!(full == partial)) interp.stable = false;
    interp.coef_n.push_back(std::move(full));
  }
  return interp;
}

std::vector<PolyQ> pk_display(int k) {
  switch (k) {
    case 0:
      return {PolyQ(Rational(1))};
    case 1:
      return {PolyQ(Rational(-1)), PolyQ(Rational(1))};
    case 2: {
      PolyQ q = poly_in_n({2, -1, -2, 1}) * Rational(1, 24);  // (n+1)(n-1)(n-2)/24
      return {PolyQ(), q, -q};
    }
    case 3:
      return {PolyQ(), PolyQ(), PolyQ(), PolyQ()};
    case 4: {
      PolyQ r = poly_in_n({2, -1, -2, 1}) * Rational(1, 5760);  // (n+1)(n-1)(n-2)/5760
      PolyQ a1 = poly_in_n({-3, 1}) * poly_in_n({-24, 22, -17, 7});
      PolyQ a2 = -(poly_in_n({-3, 2}) * poly_in_n({-1, 3}) * poly_in_n({14, -9, 7}));
      PolyQ a3 = poly_in_n({-2, -23, 52, -33, 14}) * Rational(3);
      return {PolyQ(), -(r * a1), r * (a1 - a2), r * (a2 - a3), r * a3};
    }
    case 5: {
      PolyQ r = poly_in_n({2, -1, -2, 1}) * Rational(1, 5760);
      PolyQ b1 = -(poly_in_n({-3, 1}) * poly_in_n({-4, 1}) * poly_in_n({-24, 22, -17, 7}));
      PolyQ b2 = poly_in_n({-1, 1}) * poly_in_n({-2, 1}) * poly_in_n({-124, 152, -115, 49}) *
                 Rational(2);
      PolyQ b3 = -(poly_in_n({-1, 1}) * poly_in_n({-1, 3}) * poly_in_n({-4, 3}) *
                   poly_in_n({14, -9, 7}) * Rational(4));
      PolyQ b4 = poly_in_n({-1, 1}) * poly_in_n({-2, 3}) * poly_in_n({-1, 17, -11, 7}) *
                 Rational(8);
      return {PolyQ(), r * b1, -(r * (b1 - b2)), -(r * (b2 - b3)), -(r * (b3 - b4)),
              -(r * b4)};
    }
    default:
      throw std::invalid_argument("pk_display: only k <= 5 is tabulated");
  }
}

PolyQ ek_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("ek_polynomial: k >= 1");
  if (k == 1) return poly_in_n({-1, 1});  // X - 1
  auto s2 = stirling_second_table(k);
  std::vector<Rational> c(k + 1, Rational(0));
  for (int l = 1; l <= k; ++l) {
    Rational v = Rational(mpz_class(factorial_z(l - 1) * s2[k][l]));
    c[l] = ((k - l) % 2 == 0) ? v : -v;
  }
  return PolyQ(std::move(c));
}

std::vector<Rational> alpha_coefficients(int jmax) {
  // sinh(u/2)/(u/2) in t = u^2: sum_m t^m / (4^m (2m+1)!), inverted.
  XSeries<Rational> s(jmax);
  for (int m = 0; m <= jmax; ++m)
    s.at(m) = Rational(1) / Rational(mpz_class(Rational(4).pow(m).num() * factorial_z(2 * m + 1)));
  XSeries<Rational> inv = series_inverse(s);
  std::vector<Rational> out(jmax + 1);
  for (int j = 0; j <= jmax; ++j) out[j] = inv[j];
  return out;
}

Report verify_pk_residuals(int n, int kmax, int x_order) {
  auto fits = fit_pk_all(n, kmax, x_order);
  for (const auto& f : fits) {
    if (!f.residual_zero) {
      CheckFailure cf;
      cf.where = "k=" + std::to_string(f.k);
      cf.expected = "exact zero fit residual";
      cf.actual = "inconsistent overdetermined system";
      return Report::fail("pk-residual", n, x_order, std::move(cf));
    }
  }
  return Report::ok("pk-residual", n, x_order);
}

Report verify_pk_displays(const std::vector<PkInterpolation>& interp) {
  for (const auto& pk : interp) {
    if (pk.k > 5) continue;
    auto expect = pk_display(pk.k);
    for (int j = 0; j < static_cast<int>(expect.size()); ++j) {
      if (!(pk.coef_n[j] == expect[j])) {
        CheckFailure cf;
        cf.where = "k=" + std::to_string(pk.k) + " X^" + std::to_string(j);
        cf.expected = expect[j].str("n");
        cf.actual = pk.coef_n[j].str("n");
        return Report::fail("pk-display", 0, pk.k, std::move(cf));
      }
    }
    if (!pk.stable) {
      CheckFailure cf;
      cf.where = "k=" + std::to_string(pk.k);
      cf.expected = "interpolation stable under added nodes";
      cf.actual = "unstable";
      return Report::fail("pk-display", 0, pk.k, std::move(cf));
    }
  }
  return Report::ok("pk-display", 0, interp.empty() ? 0 : interp.back().k);
}

Report verify_pk_leading_terms(const std::vector<PkInterpolation>& interp) {
  auto alpha = alpha_coefficients(8);
  for (const auto& pk : interp) {
    int k = pk.k;
    if (k < 1) continue;
    int j = k / 2;
    int lead_deg = (k % 2 == 0) ? 4 * j - 1 : 4 * j;
    Rational factor = (k % 2 == 0) ? alpha[j] : alpha[j] * Rational(1 - j);
    PolyQ ek = ek_polynomial(k);
    for (int l = 0; l <= k; ++l) {
      const PolyQ& q = pk.coef_n[l];
      if (q.degree() > lead_deg) {
        CheckFailure cf;
        cf.where = "k=" + std::to_string(k) + " X^" + std::to_string(l);
        cf.expected = "n-degree <= " + std::to_string(lead_deg);
        cf.actual = "degree " + std::to_string(q.degree());
        return Report::fail("pk-leading", 0, k, std::move(cf));
      }
      Rational got = q.coeff(lead_deg);
      Rational expect = factor * ek.coeff(l);
      if (!(got == expect)) {
        CheckFailure cf;
        cf.where = "k=" + std::to_string(k) + " X^" + std::to_string(l);
        cf.expected = expect.str();
        cf.actual = got.str();
        return Report::fail("pk-leading", 0, k, std::move(cf));
      }
    }
  }
  return Report::ok("pk-leading", 0, interp.empty() ? 0 : interp.back().k);
}

Report verify_pk_divisibility(const std::vector<PkInterpolation>& interp) {
  PolyQ modulus = poly_in_n({2, -1, -2, 1});  // (n+1)(n-1)(n-2)
  for (const auto& pk : interp) {
    if (pk.k != 2 && pk.k != 4 && pk.k != 5) continue;
    PolyQ sum_at_one;
    for (int l = 0; l <= pk.k; ++l) {
      auto [q, r] = PolyQ::divmod(pk.coef_n[l], modulus);
      (void)q;
      bool ok = r.is_zero();
      if (l == 0) ok = ok && pk.coef_n[0].is_zero();  // X | P_k
      if (!ok) {
        CheckFailure cf;
        cf.where = "k=" + std::to_string(pk.k) + " X^" + std::to_string(l);
        cf.expected = "divisible by (n+1)(n-1)(n-2) X (X-1)";
        cf.actual = pk.coef_n[l].str("n");
        return Report::fail("pk-divisibility", 0, pk.k, std::move(cf));
      }
      sum_at_one = sum_at_one + pk.coef_n[l];
    }
    if (!sum_at_one.is_zero()) {  // (X - 1) | P_k
      CheckFailure cf;
      cf.where = "k=" + std::to_string(pk.k);
      cf.expected = "P_k(n, 1) = 0";
      cf.actual = sum_at_one.str("n");
      return Report::fail("pk-divisibility", 0, pk.k, std::move(cf));
    }
  }
  return Report::ok("pk-divisibility", 0, 0);
}

Report verify_ek_identity(int kmax, int d_order) {
  XSeries<Rational> geo(d_order);
  for (int d = 0; d <= d_order; ++d) geo.at(d) = Rational(1);  // 1/(1-x)
  for (int k = 1; k <= kmax; ++k) {
    PolyQ ek = ek_polynomial(k);
    // Horner in the series ring
    XSeries<Rational> acc(d_order);
    for (int l = ek.degree(); l >= 0; --l) {
      acc = acc * geo;
      acc.at(0) += ek.coeff(l);
    }
    for (int d = 0; d <= d_order; ++d) {
      Rational expect(0);
      if (d >= 1) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(k - 1));
        expect = Rational(t);
      }
      if (!(acc[d] == expect)) {
        CheckFailure cf;
        cf.degree = d;
        cf.where = "k=" + std::to_string(k);
        cf.expected = expect.str();
        cf.actual = acc[d].str();
        return Report::fail("ek-identity", 0, d_order, std::move(cf));
      }
    }
  }
  return Report::ok("ek-identity", 0, d_order);
}

}  // namespace mhg
