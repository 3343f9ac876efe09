#include "mhg/hg_series.hpp"

#include <stdexcept>

#include "mhg/errors.hpp"

namespace mhg {

namespace {

// prod_{r=a..b} (n w + r) as a polynomial in w.
PolyQ rising_numerator(int n, long a, long b) {
  PolyQ p(Rational(1));
  for (long r = a; r <= b; ++r)
    p = p * PolyQ(std::vector<Rational>{Rational(r), Rational(n)});
  return p;
}

// (w + d)^n - w^n, degree n-1 in w.
PolyQ denominator_factor(int n, long d) {
  std::vector<Rational> c(n, Rational(0));
  mpz_class dz(d);
  for (int k = 0; k < n; ++k) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), dz.get_mpz_t(), static_cast<unsigned long>(n - k));
    c[k] = Rational(mpz_class(binomial_z(n, k) * t));
  }
  return PolyQ(std::move(c));
}

// (w + d)^n.
PolyQ shifted_power(int n, long d) {
  PolyQ p = denominator_factor(n, d);
  std::vector<Rational> c(n + 1, Rational(0));
  for (int k = 0; k < n; ++k) c[k] = p.coeff(k);
  c[n] = Rational(1);
  return PolyQ(std::move(c));
}

HgSeries build_family(int n, int order, HgKind kind) {
  if (n < 1) throw std::invalid_argument("build_f: n must be >= 1");
  if (order < 0) throw std::invalid_argument("build_f: order must be >= 0");
  XSeries<RatFun> s(order);
  s.at(0) = RatFun(1);
  RatFun cur(1);
  for (long d = 1; d <= order; ++d) {
    long lo = (kind == HgKind::FMinus1) ? n * (d - 1) : n * (d - 1) + 1;
    long hi = (kind == HgKind::FMinus1) ? n * d - 1 : n * d;
    PolyQ num = rising_numerator(n, lo, hi);
    PolyQ den = (kind == HgKind::FHat0) ? shifted_power(n, d) : denominator_factor(n, d);
    cur = cur * RatFun(num, den);
    s.at(d) = cur;
  }
  HgSeries h;
  h.n = n;
  h.kind = kind;
  h.coeff = std::move(s);
  h.require_in_p("build_f");
  return h;
}

}  // namespace

bool HgSeries::in_p() const {
  if (!(coeff[0] == RatFun(1))) return false;
  for (int d = 0; d <= coeff.order(); ++d)
    if (!coeff[d].holomorphic_at_zero()) return false;
  return true;
}

void HgSeries::require_in_p(const std::string& who) const {
  if (!in_p()) throw NotInP(who + ": series is not in P");
}

HgSeries build_f(int n, int order) { return build_family(n, order, HgKind::F); }

HgSeries build_f_minus1(int n, int order) { return build_family(n, order, HgKind::FMinus1); }

HgSeries build_f_hat0(int n, int order) { return build_family(n, order, HgKind::FHat0); }

HgSeries apply_mirror_map(const HgSeries& f) {
  const int order = f.order();
  XSeries<Rational> at0 = eval_w0(f.coeff);
  if (at0[0].is_zero()) throw NotInP("apply_mirror_map: F(0, x) has zero constant term");
  XSeries<Rational> inv = series_inverse(at0);

  XSeries<RatFun> out(order);
  out.at(0) = RatFun(1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int d = 1; d <= order; ++d) {
    // g_d = sum_k f_k * inv_{d-k}, then (w + d)/w.
    RatFun acc;
    for (int k = 0; k <= d; ++k) {
      if (inv[d - k].is_zero()) continue;
      acc += f.coeff[k] * RatFun(inv[d - k]);
    }
    out.at(d) = acc.mul_linear(Rational(d)).div_linear(Rational(0));
  }

  HgSeries h;
  h.n = f.n;
  h.kind = f.kind;
  h.iterate = f.iterate + 1;
  h.coeff = std::move(out);
  h.require_in_p("apply_mirror_map");
  return h;
}

HgSeries apply_mirror_map_iterated(HgSeries f, int times) {
  for (int i = 0; i < times; ++i) f = apply_mirror_map(f);
  return f;
}

HgSeries perturb_coefficient(HgSeries f, int degree, const RatFun& delta) {
  f.coeff.at(degree) += delta;
  return f;
}

}  // namespace mhg
