#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhg/lpolynomial.hpp"
#include "mhg/rational_function.hpp"
#include "mhg/report.hpp"

namespace mhg {

// Element of Q(a)[Lam, Lam^-1, X]: finite map (Lam-exp, X-exp) -> Q(a), with
// the derivation D(Lam) = Lam (X - 1)/a, D(X) = X^2 - X.  The relation
// X = Lam^a is never imposed; specializing a -> n sends Lam^i X^j to
// L^(i + n j).
class SymPoly {
 public:
  using Key = std::pair<int, int>;  // (lambda exponent, X exponent >= 0)

  SymPoly() = default;
  SymPoly(long v) {
    if (v != 0) t_[{0, 0}] = RatFun(v);
  }
  explicit SymPoly(const RatFun& c) {
    if (!c.is_zero()) t_[{0, 0}] = c;
  }
  static SymPoly term(int lam, int xexp, const RatFun& c) {
    SymPoly p;
    if (!c.is_zero()) p.t_[{lam, xexp}] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, RatFun>& terms() const { return t_; }
  RatFun coeff(int lam, int xexp) const {
    auto it = t_.find({lam, xexp});
    return it == t_.end() ? RatFun() : it->second;
  }

  void add_term(int lam, int xexp, const RatFun& c);

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
  SymPoly operator-() const;
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const SymPoly& a, const RatFun& s);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.t_ == b.t_; }

  // Multiply by Lam^k.
  SymPoly lam_shifted(int k) const;

  // The derivation described above.
  SymPoly derivative() const;

  // a -> n, Lam -> L, X -> L^n.
  LPolynomial specialize(int n) const;

  // Substitute Lam -> 1, X -> 1 (the x = 0 value).
  RatFun eval_at_one() const;

  std::string str() const;

 private:
  std::map<Key, RatFun> t_;
};

// Elementary symmetric function S_r(a) of 1..a as a polynomial in a
// (degree 2r), via Newton's identities over Faulhaber power sums.
PolyQ symbolic_elementary_symmetric(int r);

// Faulhaber polynomial: sum_{i=1..a} i^k as a polynomial in a.
PolyQ faulhaber_power_sum(int k);

struct SymLOperator {
  int k = 0;
  std::vector<SymPoly> coef;  // coef[i] multiplies D^i
  SymPoly apply(const SymPoly& p) const;
};

// L_k with formal n (binomials C(a - i, j + k) as falling-factorial
// polynomials, Stirling S_r(a) symbolic); k = 1 .. kmax.
std::vector<SymLOperator> build_symbolic_l_operators(int kmax);

struct SymPhiSolution {
  int smax = 0;
  std::vector<SymPoly> phi;
};

SymPhiSolution solve_symbolic_phi(int smax);

// Per-coefficient denominators of the Q(a) coefficients; the sharper
// conjecture predicts powers of a only.
struct DenominatorReport {
  struct Entry {
    int s;
    int lam, xexp;
    std::string denominator;
    bool power_of_a;
  };
  std::vector<Entry> entries;
  bool all_powers_of_a = true;
};

DenominatorReport symbolic_denominator_report(const SymPhiSolution& sol);

// Specialization a -> n reproduces the numeric route exactly.
Report verify_symbolic_specialization(const SymPhiSolution& sol, int n, int smax_check);
Report verify_symbolic_operator_specialization(int n, int kmax);

}  // namespace mhg
