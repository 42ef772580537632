#include "naf/roots.hpp"

#include "naf/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace naf {

namespace {

using Cld = std::complex<long double>;

std::vector<Cld> aberth(const IntPoly& p) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<long double> a(n + 1);
  for (std::size_t k = 0; k <= n; ++k) a[k] = p.coeffs[k].convert_to<long double>();
  auto eval = [&](const Cld& z, Cld& dp) {
    Cld v = a[n];
    dp = 0;
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * z + v;
      v = v * z + a[k];
    }
    return v;
  };
  const long double r0 = std::pow(std::max(std::fabs(a[0]), 1.0L), 1.0L / static_cast<long double>(n));
  std::vector<Cld> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                  static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(r0 * 1.1L, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Cld dp;
      const Cld pz = eval(z[i], dp);
      if (pz == Cld(0)) continue;
      const Cld ratio = pz / dp;
      Cld s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      const Cld step = ratio / (1.0L - ratio * s);
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

Rational to_dyadic(long double v) {
  // long double carries at most 64 mantissa bits; scale exactly.
  int e = 0;
  const long double m = std::frexp(v, &e);
  const long double scaled = std::ldexp(m, 64);
  Integer mant(0);
  {
    // split into two 32-bit halves to stay within integral range
    const long double hi = std::floor(scaled / 4294967296.0L);
    const long double lo = scaled - hi * 4294967296.0L;
    mant = Integer(static_cast<long long>(hi)) * Integer(4294967296LL) + Integer(static_cast<long long>(lo));
  }
  const int shift = e - 64;
  if (shift >= 0) return Rational(mant << static_cast<unsigned>(shift));
  return Rational(mant, Integer(1) << static_cast<unsigned>(-shift));
}

Rational round_nearest(const Rational& q, long e) {
  const Rational s = e >= 0 ? q * Rational(Integer(1) << static_cast<unsigned>(e))
                            : q / Rational(Integer(1) << static_cast<unsigned>(-e));
  const Integer k = floor(s + Rational(1, 2));
  return e >= 0 ? Rational(k, Integer(1) << static_cast<unsigned>(e))
                : Rational(k * (Integer(1) << static_cast<unsigned>(-e)));
}

long working_exponent(const Rational& magnitude, unsigned bits) {
  const Integer m = floor(magnitude < 1 ? Rational(1) : magnitude);
  return static_cast<long>(bits) - static_cast<long>(bit_length(m));
}

Rational polish_real(const IntPoly& p, const IntPoly& dp, Rational x, unsigned bits) {
  const Integer k = floor(x + Rational(1, 2));
  if (p(Rational(k)) == 0) return Rational(k);
  for (int iter = 0; iter < 64; ++iter) {
    const Rational fx = p(x);
    if (fx == 0) return x;
    const Rational d = dp(x);
    if (d == 0) break;
    const Rational step = fx / d;
    const long e = working_exponent(x < 0 ? Rational(-x) : x, bits);
    const Rational next = round_nearest(x - step, e);
    if (next == x) break;
    x = next;
  }
  return x;
}

ComplexRational polish_complex(const IntPoly& p, const IntPoly& dp, ComplexRational z, unsigned bits) {
  const ComplexRational g(Rational(floor(z.re + Rational(1, 2))), Rational(floor(z.im + Rational(1, 2))));
  if (g.im != 0 && p(g) == ComplexRational(0L)) return g;
  for (int iter = 0; iter < 64; ++iter) {
    const ComplexRational fz = p(z);
    if (fz == ComplexRational(0L)) return z;
    const ComplexRational d = dp(z);
    if (d == ComplexRational(0L)) break;
    const ComplexRational target = z - fz / d;
    const Rational mag = std::max(target.re < 0 ? Rational(-target.re) : target.re,
                                  target.im < 0 ? Rational(-target.im) : target.im);
    const long e = working_exponent(mag, bits);
    const ComplexRational next(round_nearest(target.re, e), round_nearest(target.im, e));
    if (next == z) break;
    z = next;
  }
  return z;
}

}  // namespace

Interval RootDisk::modulus(unsigned bits) const {
  const Rational m2 = center.norm_sq();
  if (exact()) return sqrt(Interval(m2), bits);
  Rational lo = sqrt_lower(m2, bits) - radius;
  if (lo < 0) lo = 0;
  return {lo, sqrt_upper(m2, bits) + radius};
}

Rational evaluation_error(const RatPoly& q, const RootDisk& disk, unsigned bits) {
  if (disk.exact()) return Rational(0);
  const Rational a = sqrt_upper(disk.center.norm_sq(), bits);
  const Rational b = a + disk.radius;
  Rational err(0);
  Rational pa(1), pb(1);
  for (std::size_t m = 0; m < q.coeffs.size(); ++m) {
    if (m > 0) {
      pa *= a;
      pb *= b;
    }
    const Rational& c = q.coeffs[m];
    if (c != 0) err += (c < 0 ? Rational(-c) : c) * (pb - pa);
  }
  return err;
}

RootIsolation isolate_roots(const IntPoly& p, unsigned bits) {
  if (p.degree() < 1) throw InputError("root isolation needs a polynomial of degree >= 1");
  if (!p.is_monic()) throw InputError("root isolation needs a monic polynomial");
  if (p.coeffs.front() == 0) throw InputError("polynomial has a root at zero");
  if (!is_squarefree(p)) throw InputError("polynomial has repeated roots");

  const std::size_t n = static_cast<std::size_t>(p.degree());
  const IntPoly dp = derivative(p);
  std::vector<Cld> approx = aberth(p);
  const std::size_t real_count = real_root_count(p);
  if ((n - real_count) % 2 != 0) throw Undecided("inconsistent real root count");

  std::sort(approx.begin(), approx.end(),
            [](const Cld& a, const Cld& b) { return std::fabs(a.imag()) < std::fabs(b.imag()); });
  std::vector<Rational> reals;
  std::vector<ComplexRational> uppers;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < real_count) {
      reals.push_back(polish_real(p, dp, to_dyadic(approx[i].real()), bits));
    } else if (approx[i].imag() > 0) {
      uppers.push_back(polish_complex(p, dp, {to_dyadic(approx[i].real()), to_dyadic(approx[i].imag())}, bits));
    }
  }
  if (2 * uppers.size() + reals.size() != n) throw Undecided("complex roots do not pair up");

  std::sort(reals.begin(), reals.end());
  std::sort(uppers.begin(), uppers.end(), [](const ComplexRational& a, const ComplexRational& b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  });

  RootIsolation out;
  out.bits = bits;
  for (const auto& x : reals) out.roots.push_back({ComplexRational(x), Rational(0), true});
  for (const auto& z : uppers) {
    out.roots.push_back({z, Rational(0), false});
    out.roots.push_back({z.conj(), Rational(0), false});
  }

  const Rational scale_n(static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    RootDisk& d = out.roots[i];
    const ComplexRational value = p(d.center);
    if (value == ComplexRational(0L)) continue;
    ComplexRational prod(1L);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod = prod * (d.center - out.roots[j].center);
    if (prod == ComplexRational(0L)) throw Undecided("coincident root approximations");
    const Rational w_sq = value.norm_sq() / prod.norm_sq();
    d.radius = scale_n * sqrt_upper(w_sq, bits + 32);
  }

  const Rational tol_sq = Rational(1) / Rational(Integer(1) << 128U);
  for (std::size_t i = 0; i < n; ++i) {
    const RootDisk& a = out.roots[i];
    if (a.radius * a.radius > tol_sq * a.center.norm_sq())
      throw Undecided("root enclosure wider than 2^-64 relative at " + std::to_string(bits) + " bits");
    if (!a.real && a.radius * a.radius >= a.center.im * a.center.im)
      throw Undecided("complex root enclosure meets the real axis");
    for (std::size_t j = i + 1; j < n; ++j) {
      const RootDisk& b = out.roots[j];
      const Rational sum = a.radius + b.radius;
      if (sum * sum >= (a.center - b.center).norm_sq()) throw Undecided("root enclosures overlap");
    }
  }
  return out;
}

}  // namespace naf
