#include "mhg/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "mhg/errors.hpp"

namespace mhg {

LaurentAtInfinity::LaurentAtInfinity(int top, std::vector<Rational> coeffs, int floor)
    : top_(top), c_(std::move(coeffs)), floor_(floor) {
  normalize();
}

void LaurentAtInfinity::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + lead);
    top_ -= static_cast<int>(lead);
  }
  if (c_.empty()) {
    top_ = kMinusInf;
    return;
  }
  if (floor_ != kMinusInf) {
    int lowest = top_ - static_cast<int>(c_.size()) + 1;
    if (lowest < floor_) c_.resize(c_.size() - (floor_ - lowest));
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) top_ = kMinusInf;
}

Rational LaurentAtInfinity::coeff(int j) const {
  if (j < floor_) throw OrderMismatch("LaurentAtInfinity: coefficient below floor");
  if (is_zero() || j > top_) return Rational(0);
  int idx = top_ - j;
  if (idx >= static_cast<int>(c_.size())) return Rational(0);
  return c_[idx];
}

LaurentAtInfinity LaurentAtInfinity::truncated(int floor) const {
  if (floor < floor_) throw OrderMismatch("LaurentAtInfinity: cannot extend below floor");
  LaurentAtInfinity r = *this;
  r.floor_ = floor;
  r.normalize();
  return r;
}

LaurentAtInfinity LaurentAtInfinity::operator-() const {
  LaurentAtInfinity r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentAtInfinity operator+(const LaurentAtInfinity& a, const LaurentAtInfinity& b) {
  int floor = std::max(a.floor_, b.floor_);
  int atop = a.is_zero() ? LaurentAtInfinity::kMinusInf : a.top_;
  int btop = b.is_zero() ? LaurentAtInfinity::kMinusInf : b.top_;
  int top = std::max(atop, btop);
  LaurentAtInfinity z;
  z.floor_ = floor;
  if (top == LaurentAtInfinity::kMinusInf) return z;  // both zero
  if (floor == LaurentAtInfinity::kMinusInf) {
    // both exact: extend down to the lowest stored term
    int alow = a.is_zero() ? top : a.top_ - static_cast<int>(a.c_.size()) + 1;
    int blow = b.is_zero() ? top : b.top_ - static_cast<int>(b.c_.size()) + 1;
    floor = std::min(alow, blow);
  }
  if (top < floor) return z;
  std::vector<Rational> c;
  c.reserve(top - floor + 1);
  for (int j = top; j >= floor; --j) c.push_back(a.coeff(j) + b.coeff(j));
  return LaurentAtInfinity(top, std::move(c), z.floor_);
}

LaurentAtInfinity operator-(const LaurentAtInfinity& a, const LaurentAtInfinity& b) {
  return a + (-b);
}

LaurentAtInfinity operator*(const LaurentAtInfinity& a, const LaurentAtInfinity& b) {
  constexpr int kInf = LaurentAtInfinity::kMinusInf;
  // Unknown tails contaminate the product below floor_of(x) + top_of(y).
  auto contamination = [](const LaurentAtInfinity& x, const LaurentAtInfinity& y) -> long {
    if (x.floor_ == kInf) return kInf;  // x exact: no contamination from x's tail
    if (y.is_zero() && y.floor_ == kInf) return kInf;
    int ytop = y.is_zero() ? y.floor_ - 1 : y.top_;
    return static_cast<long>(x.floor_) + ytop;
  };
  long fl = std::max(contamination(a, b), contamination(b, a));

  if (a.is_zero() || b.is_zero()) {
    LaurentAtInfinity z;
    z.floor_ = fl <= kInf ? kInf : static_cast<int>(fl);
    return z;
  }
  int top = a.top_ + b.top_;
  int alow = a.top_ - static_cast<int>(a.c_.size()) + 1;
  int blow = b.top_ - static_cast<int>(b.c_.size()) + 1;
  int store_floor = fl <= kInf ? alow + blow : std::max<long>(fl, static_cast<long>(alow) + blow);
  if (store_floor > top) {
    LaurentAtInfinity z;
    z.floor_ = fl <= kInf ? kInf : static_cast<int>(fl);
    return z;
  }
  std::vector<Rational> c(top - store_floor + 1, Rational(0));
  for (int i = a.top_; i >= alow; --i) {
    const Rational& av = a.c_[a.top_ - i];
    if (av.is_zero()) continue;
    for (int j = b.top_; j >= blow; --j) {
      int t = i + j;
      if (t < store_floor) break;
      const Rational& bv = b.c_[b.top_ - j];
      if (bv.is_zero()) continue;
      c[top - t] += av * bv;
    }
  }
  return LaurentAtInfinity(top, std::move(c), fl <= kInf ? kInf : static_cast<int>(fl));
}

LaurentAtInfinity operator*(const LaurentAtInfinity& a, const Rational& s) {
  LaurentAtInfinity r = a;
  if (s.is_zero()) {
    r.c_.clear();
    r.top_ = LaurentAtInfinity::kMinusInf;
    return r;  // exactness of the floor is preserved
  }
  for (auto& x : r.c_) x = x * s;
  return r;
}

std::string LaurentAtInfinity::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    int j = top_ - static_cast<int>(i);
    if (!first) os << " + ";
    os << "(" << c_[i] << ")";
    if (j != 0) os << "*w^" << j;
    first = false;
  }
  if (floor_ != kMinusInf) os << " + O(w^" << (floor_ - 1) << ")";
  return os.str();
}

LaurentAtInfinity laurent_at_infinity(const PolyQ& num, const PolyQ& den, int floor) {
  if (den.is_zero()) throw DivisionByNonUnit("laurent_at_infinity: zero denominator");
  if (num.is_zero()) return LaurentAtInfinity();
  int dn = num.degree(), dd = den.degree();
  int top = dn - dd;
  if (floor > top) {
    LaurentAtInfinity z;
    return z.truncated(floor);
  }
  // Long division in descending powers.  The sliding window holds the
  // remainder coefficients of w^(j+dd), w^(j+dd-1), ... wide enough for
  // every denominator coefficient to land inside.
  int width = std::max(dn, dd) + 1;
  std::vector<Rational> rem(width, Rational(0));
  for (int i = 0; i <= dn; ++i) rem[dn - i] = num.coeff(i);
  Rational lcinv = den.coeff(dd).inv();
  std::vector<Rational> out;
  out.reserve(top - floor + 1);
  for (int j = top; j >= floor; --j) {
    Rational q = rem.front() * lcinv;
    out.push_back(q);
    std::vector<Rational> next(width, Rational(0));
    for (int i = 1; i <= width; ++i) {
      Rational cur = (i < width) ? rem[i] : Rational(0);
      if (!q.is_zero()) {
        int den_idx = dd - i;
        if (den_idx >= 0) cur -= q * den.coeff(den_idx);
      }
      next[i - 1] = cur;
    }
    rem = std::move(next);
  }
  return LaurentAtInfinity(top, std::move(out), floor);
}

LaurentAtInfinity laurent_at_infinity(const RatFun& r, int floor) {
  return laurent_at_infinity(r.num(), r.den(), floor);
}

}  // namespace mhg
