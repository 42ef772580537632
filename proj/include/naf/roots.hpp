#pragma once

// Certified isolation of the complex roots of a squarefree monic integer
// polynomial. Approximations come from Aberth iteration in long double and are
// polished by Newton steps in dyadic rational arithmetic; enclosures are then
// certified with the Weierstrass-correction inclusion disks
//   D_i = { z : |z - z_i| <= n |p(z_i) / prod_{j != i} (z_i - z_j)| },
// whose union holds every root, a component of k disks holding exactly k.
// Pairwise disjoint disks therefore isolate one root each.

#include "naf/arith.hpp"
#include "naf/interval.hpp"
#include "naf/poly.hpp"

#include <vector>

namespace naf {

struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  explicit ComplexRational(const Integer& r) : re(r), im(0) {}
  explicit ComplexRational(long r) : re(r), im(0) {}

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    const Rational d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

  ComplexRational conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }
};

/// Disk { z : |z - center| <= radius } holding exactly one root.
struct RootDisk {
  ComplexRational center;
  Rational radius;  // rigorous; zero when `center` is the root itself
  bool real = false;

  bool exact() const { return radius == 0; }
  /// Enclosure of |root|.
  Interval modulus(unsigned bits) const;
};

/// Roots ordered as: real roots ascending, then each complex root with
/// positive imaginary part followed directly by its conjugate, pairs sorted by
/// (real part, imaginary part).
struct RootIsolation {
  std::vector<RootDisk> roots;
  unsigned bits = 0;
};

/// Throws Undecided when `bits` is not enough to certify disjoint disks with
/// relative radius at most 2^-64, and InputError for non-monic, non-squarefree
/// or zero polynomials.
RootIsolation isolate_roots(const IntPoly& p, unsigned bits);

/// Upper bound on max |q(z) - q(center)| over the disk, q with rational coefficients.
Rational evaluation_error(const RatPoly& q, const RootDisk& disk, unsigned bits);

}  // namespace naf
