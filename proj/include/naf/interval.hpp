#pragma once

// Closed intervals with exact rational endpoints. A degenerate interval is an
// exact value, and arithmetic on exact operands stays exact, so equalities of
// rational quantities are decided rather than left open.

#include "naf/arith.hpp"

#include <string>

namespace naf {

class Interval {
 public:
  Interval() = default;
  Interval(const Rational& v) : lo_(v), hi_(v) {}  // NOLINT: implicit on purpose
  Interval(const Integer& v) : lo_(v), hi_(v) {}   // NOLINT
  Interval(long v) : lo_(v), hi_(v) {}             // NOLINT
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_exact() const { return lo_ == hi_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);  // throws Undecided if b holds 0
  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

Interval pow(const Interval& a, unsigned e);
Interval sqrt(const Interval& a, unsigned bits);  // requires a.lo() >= 0
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
Interval abs(const Interval& a);
Interval outward(const Interval& a, unsigned bits);  // trim endpoints to dyadics

enum class Order { less, equal, greater, unknown };

/// Certified comparison; `equal` only when both sides are the same exact value.
Order compare(const Interval& a, const Interval& b);

inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }
inline bool certainly_leq(const Interval& a, const Interval& b) { return a.hi() <= b.lo(); }

/// Decimal rendering: exact values as `p/q`, otherwise `[lo, hi]` rounded outward.
std::string format(const Interval& a, int significant = 20);
std::string decimal(const Rational& q, int significant, bool round_up);

}  // namespace naf
