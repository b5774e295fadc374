#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "apoly/bigint.hpp"

namespace apoly {

enum class IntervalSign { Negative, Ambiguous, Positive };

// Closed floating-point interval with outward rounding.  Every operation
// widens its result by one ulp on each side, so the exact value of the
// expression is always contained.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {}

  static Interval exact(double v) { return {v, v}; }

  static Interval of(const Int& v) {
    double d = v.get_d();  // truncates toward zero
    return widen({d, d});
  }

  static Interval of(const Rat& v) {
    double d = v.get_d();
    return widen({d, d});
  }

  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return widen({a.lo + b.lo, a.hi + b.hi});
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return widen({a.lo - b.hi, a.hi - b.lo});
  }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return widen({std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4))});
  }

  static Interval widen(Interval v) {
    double inf = std::numeric_limits<double>::infinity();
    if (std::isnan(v.lo)) v.lo = -inf;
    if (std::isnan(v.hi)) v.hi = inf;
    v.lo = std::nextafter(v.lo, -inf);
    v.hi = std::nextafter(v.hi, inf);
    return v;
  }
};

inline IntervalSign interval_sign(const Interval& iv) {
  if (iv.lo > 0.0) return IntervalSign::Positive;
  if (iv.hi < 0.0) return IntervalSign::Negative;
  return IntervalSign::Ambiguous;
}

}  // namespace apoly
