#include "naf/interval.hpp"

#include "naf/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace naf {

namespace mp = boost::multiprecision;

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }

Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_exact() && b.is_exact()) return Interval(a.lo_ * b.lo_);
  const Rational p1 = a.lo_ * b.lo_;
  const Rational p2 = a.lo_ * b.hi_;
  const Rational p3 = a.hi_ * b.lo_;
  const Rational p4 = a.hi_ * b.hi_;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Undecided("interval division by an enclosure of zero");
  const Interval inv = b.is_exact() ? Interval(1 / b.lo_) : Interval(1 / b.hi_, 1 / b.lo_);
  return a * inv;
}

Interval pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval(1L);
  if (a.is_exact()) return Interval(pow(a.lo(), e));
  const Rational l = pow(a.lo(), e);
  const Rational h = pow(a.hi(), e);
  if (e % 2 == 1 || a.lo() >= 0) return {std::min(l, h), std::max(l, h)};
  if (a.hi() <= 0) return {std::min(l, h), std::max(l, h)};
  return {Rational(0), std::max(l, h)};
}

Interval sqrt(const Interval& a, unsigned bits) {
  if (a.lo() < 0) throw std::domain_error("sqrt of interval with negative part");
  Rational r;
  if (a.is_exact() && exact_sqrt(a.lo(), r)) return Interval(r);
  return {sqrt_lower(a.lo(), bits), sqrt_upper(a.hi(), bits)};
}

Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval abs(const Interval& a) {
  if (a.lo() >= 0) return a;
  if (a.hi() <= 0) return -a;
  return {Rational(0), std::max(-a.lo(), a.hi())};
}

Interval outward(const Interval& a, unsigned bits) {
  if (a.is_exact()) return a;
  return {round_down(a.lo(), bits), round_up(a.hi(), bits)};
}

Order compare(const Interval& a, const Interval& b) {
  if (a.hi() < b.lo()) return Order::less;
  if (a.lo() > b.hi()) return Order::greater;
  if (a.is_exact() && b.is_exact()) return Order::equal;  // lo == hi on both, overlapping
  return Order::unknown;
}

std::string decimal(const Rational& q, int significant, bool round_up) {
  if (q == 0) return "0";
  const bool negative = q < 0;
  const Rational mag = negative ? Rational(-q) : q;
  // Decimal exponent of the leading digit.
  int exp10 = static_cast<int>(mp::numerator(mag).str().size()) -
              static_cast<int>(mp::denominator(mag).str().size());
  auto pow10 = [](int e) {
    Integer p(1);
    for (int i = 0; i < e; ++i) p *= 10;
    return p;
  };
  auto scaled_at = [&](int e) {
    const int shift = significant - 1 - e;
    return shift >= 0 ? mag * Rational(pow10(shift)) : mag / Rational(pow10(-shift));
  };
  while (scaled_at(exp10) >= Rational(pow10(significant))) ++exp10;
  while (scaled_at(exp10) < Rational(pow10(significant - 1))) --exp10;
  const Rational scaled = scaled_at(exp10);
  // Outward rounding: away from zero on the requested side.
  const bool away = (round_up != negative);
  Integer digits = away ? ceil(scaled) : floor(scaled);
  if (digits == pow10(significant)) {  // carry into a new leading digit
    digits = pow10(significant - 1);
    ++exp10;
  }
  std::string s = digits.str();
  std::string out;
  if (exp10 >= 0 && exp10 < significant) {
    out = s.substr(0, static_cast<std::size_t>(exp10) + 1);
    std::string frac = s.substr(static_cast<std::size_t>(exp10) + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (exp10 < 0 && exp10 >= -6) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + s;
    while (out.back() == '0') out.pop_back();
  } else {
    std::string frac = s.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = s.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" + std::to_string(exp10);
  }
  return negative ? "-" + out : out;
}

std::string format(const Interval& a, int significant) {
  if (a.is_exact()) return to_string(a.lo());
  return "[" + decimal(a.lo(), significant, false) + ", " + decimal(a.hi(), significant, true) + "]";
}

}  // namespace naf
