#pragma once

#include <vector>

#include "mhg/hg_series.hpp"
#include "mhg/ip_family.hpp"
#include "mhg/laurent.hpp"
#include "mhg/lpolynomial.hpp"
#include "mhg/report.hpp"

namespace mhg {

// The w -> infinity data of F: mu (the w^1 part of log F), the parts
// mu_j of log F at w^-j, and the exponentiated coefficients Phi_s of
// e^(-mu w) F.
struct AsymptoticExpansion {
  int n = 1;
  int x_order = 0;
  int smax = 0;
  XSeries<Rational> mu;
  std::vector<XSeries<Rational>> mu_parts;  // j = 0 .. smax
  std::vector<XSeries<Rational>> phi;       // s = 0 .. smax
};

// Direct route: log F over Q(w), each x-coefficient expanded at w = infinity.
// Throws RegularityFailure if any coefficient has w-degree > 1 there.
AsymptoticExpansion expand_log_f(int n, int x_order, int smax);
AsymptoticExpansion expand_log_f(const HgSeries& f, int smax);

// Report wrapper for the regularity statement.
Report check_regularity(int n, int x_order, int smax = 2);
Report check_regularity(const HgSeries& f, int smax = 2);

// mu' = L - 1 (as D-derivative), Phi_0 = L, Phi_1 = ((n-2)(n+1)/24n)(L - L^n).
std::vector<Report> verify_asymptotic_closed_forms(int n, int x_order);
std::vector<Report> verify_asymptotic_closed_forms(const AsymptoticExpansion& ae);

// The quadratic identity for the H_p log-derivatives: sum over p of
// (H_p'/H_p)^2 against the derivative closed form.
Report verify_h_log_identity(int n, int order);
Report verify_h_log_identity(const IpFamily& fam);

// --- recursion polynomials and operator hierarchy ----------------------

struct HPolyTable {
  int n = 1;
  int mmax = 0;
  std::vector<std::vector<PolyQ>> H;  // H[m][j] for 0 <= j <= m <= mmax
  std::vector<std::vector<PolyQ>> Q;  // Q[j][k] for 0 <= k <= j <= mmax
};

// Builds both tables by their recursions and asserts the closed forms for
// j <= 2 plus the binomial reconstruction of H from Q (throws
// TableInconsistency on any mismatch).
HPolyTable build_h_tables(int n, int mmax);
Report check_h_tables(int n, int mmax);

struct LOperator {
  int n = 1;
  int k = 0;
  std::vector<LPolynomial> coef;  // coef[i] multiplies D^i
  LPolynomial apply(const LPolynomial& p) const;
};

// L_1 .. L_n; asserts the k = 1, 2 closed forms (TableInconsistency).
std::vector<LOperator> build_l_operators(int n);
std::vector<Report> check_l_operators(int n);

// --- Phi by the first-order ODE hierarchy ------------------------------

struct PhiSolution {
  int n = 1;
  int smax = 0;
  std::vector<LPolynomial> phi;         // s = 0 .. smax
  std::vector<int> degree_bound_used;   // bound that closed each solve
};

PhiSolution solve_phi_recursion(int n, int smax);

// Membership Phi_s in L Q[L] and the initial condition Phi_s(0) = delta_{0,s};
// records the observed L-degrees.
Report verify_phi_structure(const PhiSolution& sol);

// Phi_2 = Phi_1^2 / (2 L Phi_0) and the five-line Phi_3 closed form.
std::vector<Report> verify_phi_low_closed_forms(const PhiSolution& sol);

// ODE route vs direct expansion, exact per s and x-degree.
Report cross_check_phi(int n, int x_order, int smax);
Report cross_check_phi(const PhiSolution& sol, const AsymptoticExpansion& ae);

// The twelve tabulated renormalized polynomials (n in {3,4,5}, s <= 4).
Report verify_phi_table(int n);
Report verify_phi_table(const PhiSolution& sol);

}  // namespace mhg
