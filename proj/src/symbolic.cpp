#include "mhg/symbolic.hpp"

#include <sstream>

#include "mhg/asymptotics.hpp"
#include "mhg/errors.hpp"
#include "mhg/stirling.hpp"

namespace mhg {

void SymPoly::add_term(int lam, int xexp, const RatFun& c) {
  if (c.is_zero()) return;
  Key k{lam, xexp};
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  SymPoly r = a;
  for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
  return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
  SymPoly r = a;
  for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, -c);
  return r;
}

SymPoly SymPoly::operator-() const {
  SymPoly r;
  for (const auto& [k, c] : t_) r.t_[k] = -c;
  return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

SymPoly operator*(const SymPoly& a, const RatFun& s) {
  SymPoly r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : a.t_) r.add_term(k.first, k.second, c * s);
  return r;
}

SymPoly SymPoly::lam_shifted(int k) const {
  SymPoly r;
  for (const auto& [key, c] : t_) r.t_[{key.first + k, key.second}] = c;
  return r;
}

SymPoly SymPoly::derivative() const {
  // D(Lam^i X^j) = (i/a + j)(X^(j+1) - X^j) Lam^i
  SymPoly r;
  PolyQ a_poly(std::vector<Rational>{Rational(0), Rational(1)});
  for (const auto& [key, c] : t_) {
    auto [i, j] = key;
    RatFun factor(PolyQ(std::vector<Rational>{Rational(i), Rational(j)}), a_poly);
    RatFun f = c * factor;
    r.add_term(i, j + 1, f);
    r.add_term(i, j, -f);
  }
  return r;
}

LPolynomial SymPoly::specialize(int n) const {
  LPolynomial r;
  Rational a(n);
  for (const auto& [key, c] : t_) r.add_term(key.first + n * key.second, c.eval(a));
  return r;
}

RatFun SymPoly::eval_at_one() const {
  RatFun r;
  for (const auto& [key, c] : t_) r += c;
  return r;
}

std::string SymPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str("a") << ")";
    if (key.first != 0) os << "*Lam^" << key.first;
    if (key.second != 0) os << "*X^" << key.second;
    first = false;
  }
  return os.str();
}

PolyQ faulhaber_power_sum(int k) {
  // Bernoulli numbers with B_1 = +1/2, so that
  // sum_{i=1..a} i^k = (1/(k+1)) sum_j C(k+1, j) B_j a^(k+1-j).
  std::vector<Rational> bern(k + 1);  // B^- convention, sign-flipped below
  for (int m = 0; m <= k; ++m) {
    if (m == 0) {
      bern[0] = Rational(1);
      continue;
    }
    Rational acc(0);
    for (int j = 0; j < m; ++j)
      acc += Rational(binomial_z(m + 1, j)) * bern[j];
    bern[m] = -acc / Rational(static_cast<long>(m) + 1);
  }
  std::vector<Rational> c(k + 2, Rational(0));
  for (int j = 0; j <= k; ++j) {
    Rational b = bern[j];
    if (j == 1) b = -b;  // switch to B_1 = +1/2
    c[k + 1 - j] = Rational(binomial_z(k + 1, j)) * b / Rational(k + 1);
  }
  return PolyQ(std::move(c));
}

PolyQ symbolic_elementary_symmetric(int r) {
  // Newton: r e_r = sum_{i=1..r} (-1)^(i-1) e_{r-i} p_i.
  std::vector<PolyQ> e{PolyQ(Rational(1))};
  for (int m = 1; m <= r; ++m) {
    PolyQ acc;
    for (int i = 1; i <= m; ++i) {
      PolyQ t = e[m - i] * faulhaber_power_sum(i);
      acc = (i % 2 == 1) ? acc + t : acc - t;
    }
    e.push_back(acc * Rational(1, m));
  }
  return e[r];
}

namespace {

// C(q - off, m) as a polynomial in a evaluated... q = a: falling factorial
// (a - off)(a - off - 1)...(a - off - m + 1)/m!.
RatFun binom_sym(int off, int m) {
  PolyQ p(Rational(1));
  for (int t = 0; t < m; ++t)
    p = p * PolyQ(std::vector<Rational>{Rational(-off - t), Rational(1)});
  return RatFun(p * Rational(1, factorial_z(m)));
}

RatFun a_power_inv(int r) {  // 1/a^r
  return RatFun(PolyQ(Rational(1)), PolyQ::monomial(r, Rational(1)));
}

using XPolySym = Polynomial<RatFun>;  // polynomials in X over Q(a)

// Q_{j,k} with formal n.
std::vector<std::vector<XPolySym>> symbolic_q_table(int jmax) {
  std::vector<std::vector<XPolySym>> q(jmax + 1);
  q[0] = {XPolySym(RatFun(1))};
  XPolySym xm1(std::vector<RatFun>{RatFun(-1), RatFun(1)});
  for (int j = 1; j <= jmax; ++j) {
    q[j].assign(j + 1, XPolySym());
    for (int k = 1; k <= j; ++k) {
      XPolySym qk = (k <= j - 1) ? q[j - 1][k] : XPolySym();
      XPolySym qk1 = (k - 1 <= j - 1) ? q[j - 1][k - 1] : XPolySym();
      XPolySym inner = qk.derivative().shifted(1);
      inner = inner + (qk * RatFun(k) + qk1 * RatFun(k + j - 1)) * a_power_inv(1);
      q[j][k] = xm1 * inner;
    }
  }
  return q;
}

// H_{a - off, j} through the Q-form.
XPolySym h_sym(const std::vector<std::vector<XPolySym>>& q, int off, int j) {
  if (j == 0) return XPolySym(RatFun(1));
  XPolySym acc;
  for (int k = 1; k <= j; ++k) acc = acc + q[j][k] * binom_sym(off, j + k);
  return acc;
}

SymPoly xpoly_to_sym(const XPolySym& p) {
  SymPoly r;
  for (int e = 0; e <= p.degree(); ++e) r.add_term(0, e, p.coeff(e));
  return r;
}

}  // namespace

SymPoly SymLOperator::apply(const SymPoly& p) const {
  SymPoly out, cur = p;
  for (size_t i = 0; i < coef.size(); ++i) {
    if (i > 0) cur = cur.derivative();
    out = out + coef[i] * cur;
  }
  return out;
}

std::vector<SymLOperator> build_symbolic_l_operators(int kmax) {
  auto q = symbolic_q_table(kmax);
  XPolySym xm1(std::vector<RatFun>{RatFun(-1), RatFun(1)});
  std::vector<SymLOperator> ops;
  for (int k = 1; k <= kmax; ++k) {
    SymLOperator op;
    op.k = k;
    op.coef.assign(k + 1, SymPoly());
    for (int i = 0; i <= k; ++i) {
      XPolySym main = h_sym(q, i, k - i) * binom_sym(0, i);
      XPolySym sub;
      for (int r = 1; r <= k - i; ++r) {
        PolyQ sr = symbolic_elementary_symmetric(r);
        RatFun factor = RatFun(sr) * a_power_inv(r) * binom_sym(r, i);
        sub = sub + h_sym(q, i + r, k - i - r) * factor;
      }
      op.coef[i] = xpoly_to_sym(main - xm1 * sub);
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

namespace {

// Solve L1(phi) = rhs over Q(a)[Lam, Lam^-1, X] slice by slice in the Lam
// exponent; the image of Lam^i X^j is (i + a j - 1)(X^(j+1) - X^j) Lam^i.
SymPoly solve_l1_symbolic(const SymPoly& rhs, const Rational& init) {
  PolyQ a_poly(std::vector<Rational>{Rational(0), Rational(1)});
  auto divisor = [&](int i, int j) {  // i + a j - 1
    return RatFun(PolyQ(std::vector<Rational>{Rational(i - 1), Rational(j)}));
  };

  // Collect slices of the right-hand side.
  std::map<int, std::map<int, RatFun>> slices;
  for (const auto& [key, c] : rhs.terms()) slices[key.first][key.second] = c;

  SymPoly phi;
  for (const auto& [i, slice] : slices) {
    int maxx = slice.rbegin()->first;
    // unknowns c_{i,j}, j = 0 .. maxx - 1
    std::map<int, RatFun> c;
    auto rhs_at = [&](int m) {
      auto it = slice.find(m);
      return it == slice.end() ? RatFun() : it->second;
    };
    for (int m = maxx; m >= 1; --m) {
      RatFun above = c.count(m) ? c[m] : RatFun();
      RatFun num = rhs_at(m) + divisor(i, m) * above;
      RatFun den = divisor(i, m - 1);
      if (den.is_zero()) break;  // i = 1, m = 1: kernel direction, handled by init
      c[m - 1] = num / den;
    }
    for (const auto& [j, val] : c) phi.add_term(i, j, val);
  }

  // Kernel coefficient (Lam^1 X^0) from the initial condition.
  RatFun sum = phi.eval_at_one();
  phi.add_term(1, 0, RatFun(init) - sum);

  // Full residual check.
  SymPoly image;
  for (const auto& [key, cc] : phi.terms()) {
    auto [i, j] = key;
    RatFun f = cc * divisor(i, j);
    image.add_term(i, j + 1, f);
    image.add_term(i, j, -f);
  }
  if (!(image == rhs)) throw SolveFailure("symbolic phi: residual is nonzero");
  return phi;
}

}  // namespace

SymPhiSolution solve_symbolic_phi(int smax) {
  auto ops = build_symbolic_l_operators(smax + 1);
  SymPhiSolution sol;
  sol.smax = smax;
  sol.phi.assign(smax + 1, SymPoly());
  for (int s = 0; s <= smax; ++s) {
    SymPoly rhs;
    for (int k = 2; k <= s + 1; ++k)
      rhs = rhs - ops[k - 1].apply(sol.phi[s + 1 - k]).lam_shifted(1 - k);
    sol.phi[s] = solve_l1_symbolic(rhs, s == 0 ? Rational(1) : Rational(0));
  }
  return sol;
}

DenominatorReport symbolic_denominator_report(const SymPhiSolution& sol) {
  DenominatorReport rep;
  for (int s = 0; s <= sol.smax; ++s) {
    for (const auto& [key, c] : sol.phi[s].terms()) {
      const PolyQ& den = c.den();
      bool pow_of_a = true;
      for (int e = 0; e < den.degree(); ++e)
        if (!den.coeff(e).is_zero()) pow_of_a = false;
      DenominatorReport::Entry ent;
      ent.s = s;
      ent.lam = key.first;
      ent.xexp = key.second;
      ent.denominator = den.str("a");
      ent.power_of_a = pow_of_a;
      rep.entries.push_back(std::move(ent));
      if (!pow_of_a) rep.all_powers_of_a = false;
    }
  }
  return rep;
}

Report verify_symbolic_specialization(const SymPhiSolution& sol, int n, int smax_check) {
  PhiSolution numeric = solve_phi_recursion(n, std::min(smax_check, sol.smax));
  for (int s = 0; s <= numeric.smax; ++s) {
    LPolynomial spec;
    try {
      spec = sol.phi[s].specialize(n);
    } catch (const DivisionByNonUnit&) {
      CheckFailure cf;
      cf.where = "s=" + std::to_string(s);
      cf.expected = "denominator nonzero at a=n";
      cf.actual = "pole at a=" + std::to_string(n);
      return Report::fail("symbolic-specialization", n, sol.smax, std::move(cf));
    }
    if (!(spec == numeric.phi[s])) {
      CheckFailure cf;
      cf.where = "s=" + std::to_string(s);
      cf.expected = numeric.phi[s].str();
      cf.actual = spec.str();
      return Report::fail("symbolic-specialization", n, sol.smax, std::move(cf));
    }
  }
  return Report::ok("symbolic-specialization", n, sol.smax);
}

Report verify_symbolic_operator_specialization(int n, int kmax) {
  int kk = std::min(kmax, n);
  auto sym = build_symbolic_l_operators(kk);
  auto num = build_l_operators(n);
  for (int k = 1; k <= kk; ++k) {
    const SymLOperator& so = sym[k - 1];
    const LOperator& no = num[k - 1];
    for (int i = 0; i <= k; ++i) {
      LPolynomial spec;
      try {
        spec = so.coef[i].specialize(n);
      } catch (const DivisionByNonUnit&) {
        CheckFailure cf;
        cf.where = "k=" + std::to_string(k) + " i=" + std::to_string(i);
        cf.expected = "denominator nonzero at a=n";
        cf.actual = "pole";
        return Report::fail("symbolic-l-operators", n, kk, std::move(cf));
      }
      if (!(spec == no.coef[i])) {
        CheckFailure cf;
        cf.where = "k=" + std::to_string(k) + " i=" + std::to_string(i);
        cf.expected = no.coef[i].str();
        cf.actual = spec.str();
        return Report::fail("symbolic-l-operators", n, kk, std::move(cf));
      }
    }
  }
  return Report::ok("symbolic-l-operators", n, kk);
}

}  // namespace mhg
