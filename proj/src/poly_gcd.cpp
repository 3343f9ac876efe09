#include "mhg/poly_gcd.hpp"

#include <cstdint>
#include <mutex>
#include <vector>

namespace mhg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Primes just below 2^62, generated on demand; value return keeps readers
// safe from concurrent growth of the pool.
u64 nth_prime(size_t i) {
  static std::vector<u64> primes;
  static mpz_class cursor = (mpz_class(1) << 62) - 1;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= i) {
    mpz_class p;
    mpz_nextprime(p.get_mpz_t(), cursor.get_mpz_t());
    cursor = p;
    primes.push_back(mpz_get_ui(p.get_mpz_t()));
  }
  return primes[i];
}

using ZPoly = std::vector<mpz_class>;  // dense, may carry trailing zeros

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void zdivexact_scalar(ZPoly& p, const mpz_class& s) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
}

// p mod q as vector of residues.
std::vector<u64> zmod_image(const ZPoly& p, u64 q) {
  std::vector<u64> r(p.size());
  mpz_class t;
  for (size_t i = 0; i < p.size(); ++i) {
    t = p[i] % (unsigned long)q;
    if (t < 0) t += (unsigned long)q;
    r[i] = mpz_get_ui(t.get_mpz_t());
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Monic gcd in GF(p)[w] by the Euclidean algorithm.
std::vector<u64> gf_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  auto deg = [](const std::vector<u64>& v) { return static_cast<int>(v.size()) - 1; };
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    u64 binv = invmod(b.back(), p);
    while (deg(a) >= deg(b) && !a.empty()) {
      u64 f = mulmod(a.back(), binv, p);
      int k = deg(a) - deg(b);
      for (int i = 0; i <= deg(b); ++i) {
        u64 s = mulmod(f, b[i], p);
        a[i + k] = (a[i + k] >= s) ? a[i + k] - s : a[i + k] + p - s;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

PolyQ zpoly_to_monic_q(const ZPoly& p) {
  std::vector<Rational> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = Rational(p[i]);
  return PolyQ(std::move(c)).monic();
}

bool zpoly_divides_q(const ZPoly& d, const PolyQ& a) {
  std::vector<Rational> c(d.size());
  for (size_t i = 0; i < d.size(); ++i) c[i] = Rational(d[i]);
  PolyQ dq(std::move(c));
  auto [q, r] = PolyQ::divmod(a, dq);
  (void)q;
  return r.is_zero();
}

// Pseudo-remainder prem(a, b): lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  int db = zdeg(b);
  const mpz_class& lb = b.back();
  while (zdeg(a) >= db) {
    int k = zdeg(a) - db;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + k] -= la * b[i];
    ztrim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

std::vector<mpz_class> primitive_integer_poly(const PolyQ& p) {
  if (p.is_zero()) return {};
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
  ZPoly z(p.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    z[i] = c.num() * (den / c.den());
  }
  mpz_class cont = zcontent(z);
  if (cont != 0) zdivexact_scalar(z, cont);
  if (z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

PolyQ poly_gcd_modular(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return PolyQ(Rational(1));

  ZPoly za = primitive_integer_poly(a);
  ZPoly zb = primitive_integer_poly(b);
  mpz_class lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), za.back().get_mpz_t(), zb.back().get_mpz_t());

  int best_deg = std::min(zdeg(za), zdeg(zb)) + 1;
  ZPoly crt;        // symmetric-range lift of lc_gcd * monic image
  mpz_class mod = 1;
  ZPoly last_candidate;
  bool have_last = false;

  for (size_t pi = 0;; ++pi) {
    u64 p = nth_prime(pi);
    if (za.back() % (unsigned long)p == 0 || zb.back() % (unsigned long)p == 0) continue;
    auto g = gf_gcd(zmod_image(za, p), zmod_image(zb, p), p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return PolyQ(Rational(1));
    if (dg > best_deg) continue;  // unlucky prime
    if (dg < best_deg) {          // previous primes were unlucky
      best_deg = dg;
      crt.assign(dg + 1, mpz_class(0));
      mod = 1;
      have_last = false;
    }
    // Normalize image so its leading coefficient is lc_gcd mod p.
    u64 scale = mpz_class(lc_gcd % (unsigned long)p).get_ui();
    if (scale != 1)
      for (auto& c : g) c = mulmod(c, scale, p);
    // CRT merge into symmetric range.
    mpz_class newmod = mod * (unsigned long)p;
    for (int i = 0; i <= dg; ++i) {
      mpz_class cur = crt[i] % (unsigned long)p;
      if (cur < 0) cur += (unsigned long)p;
      u64 r = mpz_get_ui(cur.get_mpz_t());
      u64 delta = (g[i] >= r) ? g[i] - r : g[i] + p - r;
      mpz_class minv;
      {
        mpz_class mm = mod % (unsigned long)p;
        if (mm < 0) mm += (unsigned long)p;
        minv = (unsigned long)invmod(mpz_get_ui(mm.get_mpz_t()), p);
      }
      mpz_class t = (minv * (unsigned long)delta) % (unsigned long)p;
      crt[i] += mod * t;
      // reduce into (-newmod/2, newmod/2]
      mpz_class half = newmod / 2;
      if (crt[i] > half) crt[i] -= newmod;
      if (crt[i] < -half) crt[i] += newmod;
    }
    mod = newmod;

    ZPoly cand = crt;
    ztrim(cand);
    if (have_last && cand == last_candidate) {
      ZPoly prim = cand;
      mpz_class cont = zcontent(prim);
      if (cont != 0) zdivexact_scalar(prim, cont);
      if (!prim.empty() && prim.back() < 0)
        for (auto& c : prim) c = -c;
      if (!prim.empty() && zpoly_divides_q(prim, a) && zpoly_divides_q(prim, b))
        return zpoly_to_monic_q(prim);
    }
    last_candidate = cand;
    have_last = true;
  }
}

PolyQ poly_gcd_subresultant(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly A = primitive_integer_poly(a);
  ZPoly B = primitive_integer_poly(b);
  if (zdeg(A) < zdeg(B)) std::swap(A, B);

  mpz_class g = 1, h = 1;
  while (true) {
    int delta = zdeg(A) - zdeg(B);
    ZPoly R = zprem(A, B);
    if (R.empty()) {
      ZPoly prim = B;
      mpz_class cont = zcontent(prim);
      if (cont != 0) zdivexact_scalar(prim, cont);
      return zpoly_to_monic_q(prim);
    }
    if (zdeg(R) == 0) return PolyQ(Rational(1));
    A = B;
    B = R;
    mpz_class divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    zdivexact_scalar(B, divisor);
    g = A.back();
    if (delta >= 1) {
      // h = g^delta / h^(delta-1)
      mpz_class num = 1;
      for (int i = 0; i < delta; ++i) num *= g;
      mpz_class den = 1;
      for (int i = 0; i + 1 < delta; ++i) den *= h;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) { return poly_gcd_modular(a, b); }

}  // namespace mhg
