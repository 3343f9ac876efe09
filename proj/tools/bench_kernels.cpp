// Benchmarks the OpenMP kernels against their serial reference
// implementations on representative exact-arithmetic workloads, asserting
// bit-identical results.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "mhg/hg_series.hpp"
#include "mhg/poly_gcd.hpp"
#include "mhg/xseries.hpp"

using namespace mhg;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-46s %10.2f %10.2f %8.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "results equal" : "MISMATCH");
}

XSeries<Rational> rational_series(int order, unsigned seed) {
  XSeries<Rational> s(order);
  unsigned long state = seed;
  for (int d = 0; d <= order; ++d) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    long num = static_cast<long>(state % 2001) - 1000;
    long den = static_cast<long>((state >> 32) % 999) + 1;
    s.at(d) = Rational(num, den);
  }
  return s;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-46s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  {
    XSeries<Rational> a = rational_series(512, 1), b = rational_series(512, 2);
    XSeries<Rational> rs, rp;
    double s = time_ms([&] { rs = series_mul_serial(a, b); }, 3);
    double p = time_ms([&] { rp = series_mul(a, b); }, 3);
    row("convolution, Q coefficients, order 512 (serial path)", s, p, rs == rp);
  }

  {
    HgSeries f = build_f(6, 14);
    XSeries<RatFun> rs, rp;
    double s = time_ms([&] { rs = series_mul_serial(f.coeff, f.coeff); }, 1);
    double p = time_ms([&] { rp = series_mul(f.coeff, f.coeff); }, 1);
    row("convolution, Q(w) coefficients, n=6 order 14", s, p, rs == rp);
  }

  {
    // Structured gcd workload: shared factors between consecutive
    // denominator products of the hypergeometric family.
    HgSeries f = build_f(8, 10);
    PolyQ a = f.coeff[10].den() * f.coeff[9].num();
    PolyQ b = f.coeff[9].den() * f.coeff[8].num();
    PolyQ gs, gm;
    double s = time_ms([&] { gs = poly_gcd_subresultant(a, b); }, 1);
    double m = time_ms([&] { gm = poly_gcd_modular(a, b); }, 1);
    row("gcd deg~" + std::to_string(a.degree()) + " (subresultant vs modular)", s, m,
        gs == gm);
  }

  {
    HgSeries f = build_f(6, 12);
    HgSeries r1, r2;
    int saved = omp_get_max_threads();
    double s = time_ms(
        [&] {
          omp_set_num_threads(1);
          r1 = apply_mirror_map(f);
        },
        1);
    omp_set_num_threads(saved);
    double p = time_ms([&] { r2 = apply_mirror_map(f); }, 1);
    row("mirror map step, n=6 order 12", s, p, r1.coeff == r2.coeff);
  }

  return 0;
}
