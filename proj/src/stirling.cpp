#include "mhg/stirling.hpp"

namespace mhg {

std::vector<mpz_class> elementary_symmetric_table(int m) {
  // Expand product_{i=1..m} (t + i); e[r] is the coefficient of t^(m-r).
  std::vector<mpz_class> e(m + 1, mpz_class(0));
  e[0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int r = i; r >= 1; --r) e[r] += mpz_class(i) * e[r - 1];
  return e;
}

Rational stirling_first(int r, int m) {
  if (r < 0 || r > m) return Rational(0);
  return Rational(elementary_symmetric_table(m)[r]);
}

std::vector<std::vector<mpz_class>> stirling_second_table(int kmax) {
  std::vector<std::vector<mpz_class>> t(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    t[k].assign(k + 1, mpz_class(0));
    if (k == 0) {
      t[0][0] = 1;
      continue;
    }
    for (int l = 1; l <= k; ++l) {
      t[k][l] = mpz_class(l) * (l <= k - 1 ? t[k - 1][l] : mpz_class(0));
      t[k][l] += t[k - 1][l - 1];
    }
  }
  return t;
}

mpz_class stirling_second(int k, int l) {
  if (l < 0 || l > k) return 0;
  return stirling_second_table(k)[k][l];
}

}  // namespace mhg
