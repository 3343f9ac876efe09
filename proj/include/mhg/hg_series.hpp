#pragma once

#include <string>

#include "mhg/xseries.hpp"

namespace mhg {

enum class HgKind { F, FMinus1, FHat0, Iterate };

// A member of the class P: power series in x with constant term 1 whose
// coefficients are rational functions of w holomorphic at w = 0.
struct HgSeries {
  int n = 1;
  HgKind kind = HgKind::F;
  int iterate = 0;  // number of mirror-map applications on top of kind
  XSeries<RatFun> coeff;

  int order() const { return coeff.order(); }
  bool in_p() const;
  void require_in_p(const std::string& who) const;
};

// The hypergeometric series F(w, x): coefficient of x^d is
// prod_{r=1..nd} (nw + r) / prod_{r=1..d} ((w + r)^n - w^n).
HgSeries build_f(int n, int order);

// F_{-1} = w * Dw^{-1} F: numerator product starts at r = 0.
HgSeries build_f_minus1(int n, int order);

// The companion series with denominator prod (w + r)^n.
HgSeries build_f_hat0(int n, int order);

// The map M: F |-> w^{-1} Dw [ F / F(0, x) ].
HgSeries apply_mirror_map(const HgSeries& f);

HgSeries apply_mirror_map_iterated(HgSeries f, int times);

// Test hook: add delta * x^degree to the series.
HgSeries perturb_coefficient(HgSeries f, int degree, const RatFun& delta);

}  // namespace mhg
