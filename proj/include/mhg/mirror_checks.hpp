#pragma once

#include <vector>

#include "mhg/hg_series.hpp"
#include "mhg/ip_family.hpp"
#include "mhg/report.hpp"

namespace mhg {

// M^n F = F as exact equality of normalized series over Q(w); the report
// also records the observed minimal period.
Report verify_periodicity(int n, int order);
Report verify_periodicity(const HgSeries& f);

// Product, power-product, and reflection identities for the I_p, plus the
// H_p bookkeeping properties.
std::vector<Report> verify_i_identities(int n, int order);
std::vector<Report> verify_i_identities(const IpFamily& fam);

// Both hypergeometric ODE residuals, coefficient by coefficient.
std::vector<Report> verify_picard_fuchs(int n, int order);
std::vector<Report> verify_picard_fuchs(const HgSeries& f_minus1, const HgSeries& f_hat0);

// Congruence F-hat_p == F_p mod w^(n-p) and w-independence at p = n-1.
std::vector<Report> verify_hat_congruence(int n, int order);
std::vector<Report> verify_hat_congruence(const HgSeries& f, const HgSeries& f_hat0,
                                          const IpFamily& fam);

// Descent coefficients C_s^(p) of the ODE chain, computed by the repeated
// order-reduction recursion starting from the Picard-Fuchs coefficients.
struct DescentState {
  int n = 0;
  int p = 0;
  std::vector<XSeries<Rational>> coeffs;  // C_s^(p), s = 0 .. n-1-p
};

std::vector<DescentState> compute_descent(const IpFamily& fam);

// Closed forms of the two top descent coefficients at every level, and the
// final product relation back to F_{-1}.
std::vector<Report> verify_descent_closed_forms(int n, int order);
std::vector<Report> verify_descent_closed_forms(const IpFamily& fam, const HgSeries& f,
                                                const HgSeries& f_minus1);

// The full order-reduced ODE at every level; a stronger cross-check used by
// the unit tests on top of the closed-form reports above.
Report verify_descent_ode_relation(int n, int order);

}  // namespace mhg
