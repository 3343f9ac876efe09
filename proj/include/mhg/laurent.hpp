#pragma once

#include <limits>
#include <string>
#include <vector>

#include "mhg/rational.hpp"
#include "mhg/rational_function.hpp"

namespace mhg {

// Truncated Laurent expansion at w = infinity: coefficients of
// w^top, w^(top-1), ..., down to w^floor.  The floor records how far the
// expansion is reliable; ring operations propagate the tightest floor, so a
// product is never read below the range it is exact on.  A zero value is
// exact everywhere (floor = -inf sentinel).
class LaurentAtInfinity {
 public:
  static constexpr int kMinusInf = std::numeric_limits<int>::min() / 2;

  LaurentAtInfinity() : top_(kMinusInf), floor_(kMinusInf) {}
  LaurentAtInfinity(long v) : LaurentAtInfinity(Rational(v)) {}
  explicit LaurentAtInfinity(const Rational& v) : top_(kMinusInf), floor_(kMinusInf) {
    if (!v.is_zero()) {
      top_ = 0;
      c_.assign(1, v);
    }
  }
  // coeffs listed from w^top downward.
  LaurentAtInfinity(int top, std::vector<Rational> coeffs, int floor);

  bool is_zero() const { return c_.empty(); }
  int top_degree() const { return top_; }
  int floor() const { return floor_; }

  // Coefficient of w^j; exact zero above top, throws below the floor.
  Rational coeff(int j) const;

  LaurentAtInfinity truncated(int floor) const;

  LaurentAtInfinity operator-() const;
  friend LaurentAtInfinity operator+(const LaurentAtInfinity& a, const LaurentAtInfinity& b);
  friend LaurentAtInfinity operator-(const LaurentAtInfinity& a, const LaurentAtInfinity& b);
  friend LaurentAtInfinity operator*(const LaurentAtInfinity& a, const LaurentAtInfinity& b);
  friend LaurentAtInfinity operator*(const LaurentAtInfinity& a, const Rational& s);
  LaurentAtInfinity& operator+=(const LaurentAtInfinity& o) { return *this = *this + o; }
  LaurentAtInfinity& operator-=(const LaurentAtInfinity& o) { return *this = *this - o; }

  friend bool operator==(const LaurentAtInfinity& a, const LaurentAtInfinity& b) {
    return a.top_ == b.top_ && a.floor_ == b.floor_ && a.c_ == b.c_;
  }

  std::string str() const;

 private:
  void normalize();
  int top_;                  // degree of the first stored coefficient
  std::vector<Rational> c_;  // descending powers: w^top_, w^(top_-1), ...
  int floor_;                // expansion exact for powers >= floor_
};

// Exact expansion of a rational function at w = infinity down to w^floor.
// Multiplying the result back by den reproduces num above the floor.
LaurentAtInfinity laurent_at_infinity(const RatFun& r, int floor);

// Expansion of num/den given directly as polynomials (no gcd reduction
// needed beforehand).
LaurentAtInfinity laurent_at_infinity(const PolyQ& num, const PolyQ& den, int floor);

}  // namespace mhg
