#include "naf/arith.hpp"

#include <stdexcept>

namespace naf {

namespace mp = boost::multiprecision;

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

std::size_t bit_length(const Integer& a) {
  if (a == 0) return 0;
  return static_cast<std::size_t>(mp::msb(abs(a))) + 1;
}

Integer floor(const Rational& q) { return floor_div(mp::numerator(q), mp::denominator(q)); }

Integer ceil(const Rational& q) { return -floor_div(-mp::numerator(q), mp::denominator(q)); }

Integer isqrt(const Integer& a) {
  if (a < 0) throw std::domain_error("isqrt of negative integer");
  return mp::sqrt(a);
}

namespace {

// Exponent e such that q * 2^e has roughly `bits` integer bits.
long scale_exponent(const Rational& q, unsigned bits) {
  const long num_bits = static_cast<long>(bit_length(mp::numerator(q)));
  const long den_bits = static_cast<long>(bit_length(mp::denominator(q)));
  return static_cast<long>(bits) - (num_bits - den_bits);
}

Rational scale(const Rational& q, long e) {
  if (e >= 0) return q * Rational(Integer(1) << static_cast<unsigned>(e));
  return q / Rational(Integer(1) << static_cast<unsigned>(-e));
}

}  // namespace

Rational round_down(const Rational& q, unsigned bits) {
  if (q == 0) return q;
  // Already small enough: keep exact.
  if (bit_length(mp::numerator(q)) + bit_length(mp::denominator(q)) <= 2 * bits + 8) return q;
  const long e = scale_exponent(q, bits);
  return scale(Rational(floor(scale(q, e))), -e);
}

Rational round_up(const Rational& q, unsigned bits) { return -round_down(-q, bits); }

bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const Integer n = mp::numerator(q);
  const Integer d = mp::denominator(q);
  const Integer sn = isqrt(n);
  const Integer sd = isqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  root = Rational(sn, sd);
  return true;
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  Rational r;
  if (exact_sqrt(q, r)) return r;
  // floor(sqrt(q * 4^k)) / 2^k
  long k = static_cast<long>(bits) -
           (static_cast<long>(bit_length(mp::numerator(q))) -
            static_cast<long>(bit_length(mp::denominator(q)))) / 2;
  if (k < 0) k = 0;
  const Rational scaled = q * Rational(Integer(1) << static_cast<unsigned>(2 * k));
  const Integer s = isqrt(floor(scaled));
  return Rational(s, Integer(1) << static_cast<unsigned>(k));
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  Rational r;
  if (exact_sqrt(q, r)) return r;
  long k = static_cast<long>(bits) -
           (static_cast<long>(bit_length(mp::numerator(q))) -
            static_cast<long>(bit_length(mp::denominator(q)))) / 2;
  if (k < 0) k = 0;
  const Rational scaled = q * Rational(Integer(1) << static_cast<unsigned>(2 * k));
  Integer s = isqrt(ceil(scaled));
  if (Rational(s * s) < scaled) ++s;
  return Rational(s, Integer(1) << static_cast<unsigned>(k));
}

Rational pow(const Rational& q, unsigned e) {
  Rational result(1);
  Rational base = q;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign(1);
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned e) {
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string join(const IntVector& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += sep;
    out += v[i].str();
  }
  return out;
}

}  // namespace naf
