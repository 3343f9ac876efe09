#pragma once

#include <vector>

#include "mhg/laurent.hpp"
#include "mhg/polynomial.hpp"
#include "mhg/report.hpp"
#include "mhg/xseries.hpp"

namespace mhg {

// log F computed with truncated Laurent-at-infinity coefficients: exact in
// the stored w-range and fast enough for large n.  Feeds the conjecture
// pipeline; cross-checked against the direct Q(w) route in the tests.
struct LogLaurentData {
  int n = 1;
  int x_order = 0;
  int smax = 0;
  XSeries<Rational> mu;                     // w^1 part of log F
  std::vector<XSeries<Rational>> mu_parts;  // w^-j parts, j = 0 .. smax
};

LogLaurentData expand_log_laurent(int n, int x_order, int smax);

// Exact fit of the w^-k coefficient of 1 + (x/w) d/dx log F against
// L P_k(n, L^n)/(nL)^k: solves for the k+1 polynomial coefficients of P_k
// and reports whether the overdetermined system is exactly consistent.
struct PkFit {
  int n = 1;
  int k = 0;
  int x_order = 0;
  std::vector<Rational> coef;  // X^0 .. X^k
  bool residual_zero = false;
};

PkFit fit_pk(const LogLaurentData& data, int k);
std::vector<PkFit> fit_pk_all(int n, int kmax, int x_order);

// Lagrange interpolation of each X-coefficient of P_k across a set of n;
// stable means dropping the last node does not change the interpolant.
struct PkInterpolation {
  int k = 0;
  std::vector<PolyQ> coef_n;  // X^0 .. X^k, polynomials in n
  bool stable = false;
  bool fits_consistent = false;
};

PkInterpolation interpolate_pk(int k, const std::vector<int>& ns, int x_order);

// The displayed P_0 .. P_5 (coefficients as polynomials in n).
std::vector<PolyQ> pk_display(int k);

// e_k(X): e_1 = X - 1; for k >= 2 the Stirling form
// sum_l (-1)^(k-l) (l-1)! S2(k,l) X^l.
PolyQ ek_polynomial(int k);

// Coefficients of u^(2j) in (u/2)/sinh(u/2), j = 0 .. jmax.
std::vector<Rational> alpha_coefficients(int jmax);

Report verify_pk_residuals(int n, int kmax, int x_order);
Report verify_pk_displays(const std::vector<PkInterpolation>& interp);
Report verify_pk_leading_terms(const std::vector<PkInterpolation>& interp);
Report verify_pk_divisibility(const std::vector<PkInterpolation>& interp);
Report verify_ek_identity(int kmax, int d_order);

}  // namespace mhg
