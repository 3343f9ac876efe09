#pragma once

#include <vector>

#include "mhg/hg_series.hpp"
#include "mhg/wjet.hpp"
#include "mhg/xseries.hpp"

namespace mhg {

// The w = 0 specializations I_p of the mirror-map iterates, together with
// the normalized products H_p = L^p / (I_0 ... I_{p-1}).
struct IpFamily {
  int n = 1;
  int order = 0;
  std::vector<XSeries<Rational>> I;  // I_0 .. I_{count-1}
  std::vector<XSeries<Rational>> H;  // H_0 .. H_{n-1} (H_0 = 1)
  XSeries<Rational> L;               // (1 - n^n x)^(-1/n)
};

// Runs the mirror map on w-jets of depth count (one order of w is consumed
// per application), which is exactly the depth needed to read off
// I_p = (M^p F)(0, x) for p < count.  Set count > n to observe I_{n+p} = I_p.
IpFamily compute_ip_family(int n, int order, int count = -1);

// Same, but starting from externally supplied jets of F (test hook).
IpFamily compute_ip_family_from(int n, int order, std::vector<WJet> f_jets, int count);

// Jets of F(w, x) coefficients at w = 0, depth m.
std::vector<WJet> f_jets(int n, int order, int depth);

}  // namespace mhg
