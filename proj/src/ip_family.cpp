#include "mhg/ip_family.hpp"

#include <stdexcept>

#include "mhg/errors.hpp"

namespace mhg {

std::vector<WJet> f_jets(int n, int order, int depth) {
  HgSeries f = build_f(n, order);
  std::vector<WJet> jets;
  jets.reserve(order + 1);
  for (int d = 0; d <= order; ++d) jets.push_back(WJet::of_ratfun(f.coeff[d], depth));
  return jets;
}

IpFamily compute_ip_family_from(int n, int order, std::vector<WJet> cur, int count) {
  IpFamily fam;
  fam.n = n;
  fam.order = order;
  fam.L = binomial_power(-Rational(n).pow(n), Rational(-1, n), order);

  for (int p = 0; p < count; ++p) {
    XSeries<Rational> ip(order);
    for (int d = 0; d <= order; ++d) ip.at(d) = cur[d].value_at_zero();
    fam.I.push_back(ip);
    if (p + 1 == count) break;

    // One mirror-map step on jets: divide by I_p, then (w + d)/w per degree.
    XSeries<Rational> inv = series_inverse(ip);
    int m = cur[0].size();
    std::vector<WJet> next(order + 1, WJet(m, Rational(0)));
    for (int d = 0; d <= order; ++d) {
      WJet acc(m, Rational(0));
      for (int k = 0; k <= d; ++k) {
        if (inv[d - k].is_zero()) continue;
        acc = acc + cur[k] * inv[d - k];
      }
      next[d] = acc.mirror_coefficient_step(d);
    }
    cur = std::move(next);
  }

  // H_p = L^p / (I_0 ... I_{p-1}) for p = 0 .. n-1.
  XSeries<Rational> prod = XSeries<Rational>::one(order);
  XSeries<Rational> lpow = XSeries<Rational>::one(order);
  for (int p = 0; p < n; ++p) {
    if (p > 0) {
      prod = prod * fam.I[p - 1];
      lpow = lpow * fam.L;
    }
    fam.H.push_back(lpow / prod);
  }
  return fam;
}

IpFamily compute_ip_family(int n, int order, int count) {
  if (n < 1) throw std::invalid_argument("compute_ip_family: n must be >= 1");
  if (count < n) count = n;  // H_p needs I_0 .. I_{n-2}
  return compute_ip_family_from(n, order, f_jets(n, order, count), count);
}

}  // namespace mhg
