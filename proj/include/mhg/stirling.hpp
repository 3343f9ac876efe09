#pragma once

#include <vector>

#include "mhg/rational.hpp"

namespace mhg {

// Elementary symmetric functions S_r(m) of 1, 2, ..., m (unsigned Stirling
// numbers of the first kind): product_{i=1..m} (t + i) = sum_r S_r(m) t^(m-r).
std::vector<mpz_class> elementary_symmetric_table(int m);

// S_r(m) as a Rational.
Rational stirling_first(int r, int m);

// Stirling numbers of the second kind S2(k, l), 0 <= l <= k <= kmax:
// S2(k, l) = l*S2(k-1, l) + S2(k-1, l-1).
std::vector<std::vector<mpz_class>> stirling_second_table(int kmax);

mpz_class stirling_second(int k, int l);

}  // namespace mhg
