#pragma once

// Univariate polynomials with integer or rational coefficients, stored
// lowest degree first. The zero polynomial has an empty coefficient list.

#include "naf/arith.hpp"

#include <string>
#include <vector>

namespace naf {

template <typename T>
struct Poly {
  std::vector<T> coeffs;  // coeffs[k] multiplies x^k

  Poly() = default;
  explicit Poly(std::vector<T> c) : coeffs(std::move(c)) { trim(); }

  /// From a highest-degree-first list, the order used in instance files.
  static Poly from_descending(const std::vector<T>& c) { return Poly(std::vector<T>(c.rbegin(), c.rend())); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const T& leading() const { return coeffs.back(); }
  T coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : T(0); }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  template <typename V>
  V operator()(const V& x) const {
    V acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  friend bool operator==(const Poly&, const Poly&) = default;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);
IntPoly derivative(const IntPoly& p);
RatPoly derivative(const RatPoly& p);
/// x^deg(p) * p(1/x).
IntPoly reversed(const IntPoly& p);

IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);

/// Quotient and remainder over the rationals.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly remainder(const RatPoly& a, const RatPoly& b);
IntPoly remainder_monic(const IntPoly& a, const IntPoly& monic);
/// Monic gcd over the rationals.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
bool is_squarefree(const IntPoly& p);
/// Monic squarefree part of a monic integer polynomial.
IntPoly squarefree_part(const IntPoly& monic);

/// Number of distinct real roots (Sturm sequence).
std::size_t real_root_count(const IntPoly& p);

/// Exact Schur-Cohn test: all complex roots strictly inside |z| < 1.
bool all_roots_inside_unit_disk(const IntPoly& p);
/// All roots strictly outside the closed unit disk.
bool all_roots_outside_unit_disk(const IntPoly& p);

/// Power sums s_m = sum of rho^m over the roots (with multiplicity) of a
/// monic polynomial, for 0 <= m <= max_m.
std::vector<Rational> power_sums(const RatPoly& monic, std::size_t max_m);

/// Human-readable form such as "x^2 - x + 2".
std::string to_string(const IntPoly& p);

}  // namespace naf
