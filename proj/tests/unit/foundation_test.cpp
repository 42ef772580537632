#include "doctest.h"

#include "naf/arith.hpp"
#include "naf/interval.hpp"
#include "naf/poly.hpp"
#include "naf/roots.hpp"
#include "naf/error.hpp"

#include <complex>
#include <random>

using namespace naf;

namespace {

IntPoly poly(std::initializer_list<long> descending) {
  std::vector<Integer> c;
  for (long v : descending) c.emplace_back(v);
  return IntPoly::from_descending(c);
}

}  // namespace

TEST_CASE("floor division and remainder follow the floor convention") {
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(mod_floor(Integer(-7), Integer(4)) == 1);
  CHECK(mod_floor(Integer(7), Integer(-4)) >= 0);
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(isqrt(Integer(99)) == 9);
  CHECK(bit_length(Integer(0)) == 0);
  CHECK(bit_length(Integer(-8)) == 4);
}

TEST_CASE("sqrt bounds bracket and are exact on squares") {
  CHECK(sqrt_lower(Rational(9, 4), 64) == Rational(3, 2));
  CHECK(sqrt_upper(Rational(9, 4), 64) == Rational(3, 2));
  const Rational lo = sqrt_lower(Rational(2), 80), hi = sqrt_upper(Rational(2), 80);
  CHECK(lo * lo < 2);
  CHECK(hi * hi > 2);
  CHECK(hi - lo < Rational(1, Integer(1) << 70U));
  Rational r;
  CHECK_FALSE(exact_sqrt(Rational(2), r));
  CHECK(exact_sqrt(Rational(16, 9), r));
  CHECK(r == Rational(4, 3));
}

TEST_CASE("determinant and inverse") {
  IntMatrix m(3, 3, {Integer(0), Integer(2), Integer(1), Integer(1), Integer(1), Integer(0), Integer(3), Integer(0), Integer(5)});
  CHECK(determinant(m) == -13);
  const RatMatrix inv = inverse(to_rational(m));
  CHECK(inv * to_rational(m) == RatMatrix::identity(3));
  CHECK(matrix_power(m, 0) == IntMatrix::identity(3));
  CHECK(matrix_power(m, 3) == m * m * m);
}

TEST_CASE("interval comparison is exact on exact operands") {
  const Interval half(Rational(1, 2));
  CHECK(compare(half * half, Interval(Rational(1, 4))) == Order::equal);
  CHECK(compare(Interval(Rational(0), Rational(1)), Interval(Rational(1, 2))) == Order::unknown);
  CHECK(compare(Interval(Rational(0), Rational(1, 3)), half) == Order::less);
  CHECK(sqrt(Interval(Rational(4)), 64).is_exact());
  CHECK_THROWS_AS(half / Interval(Rational(-1), Rational(1)), Undecided);
  CHECK(format(Interval(Rational(3, 4))) == "3/4");
}

TEST_CASE("schur-cohn agrees with numerical roots on random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-6, 6);
  int agreed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    if (c.front() == 0) c.front() = 3;
    const IntPoly p(c);
    if (!is_squarefree(p)) continue;
    RootIsolation iso;
    try {
      iso = isolate_roots(p, 128);
    } catch (const Undecided&) {
      continue;
    }
    bool outside = true, decided = true;
    for (const auto& d : iso.roots) {
      const Interval m = d.modulus(128);
      if (m.lo() > 1) continue;
      if (m.hi() <= 1) outside = false;
      else decided = false;
    }
    if (!decided) continue;
    CHECK(all_roots_outside_unit_disk(p) == outside);
    ++agreed;
  }
  CHECK(agreed > 200);
}

TEST_CASE("root isolation") {
  SUBCASE("x^2 - x + 2 has a conjugate pair of modulus sqrt 2") {
    const RootIsolation iso = isolate_roots(poly({1, -1, 2}), 128);
    REQUIRE(iso.roots.size() == 2);
    CHECK_FALSE(iso.roots[0].real);
    CHECK(iso.roots[0].center.im > 0);
    CHECK(iso.roots[1].center == iso.roots[0].center.conj());
    const Interval m = iso.roots[0].modulus(128);
    CHECK(m.lo() * m.lo() <= 2);
    CHECK(m.hi() * m.hi() >= 2);
  }
  SUBCASE("integer and gaussian roots are snapped exactly") {
    const RootIsolation a = isolate_roots(poly({1, -2}), 128);
    CHECK(a.roots[0].exact());
    CHECK(a.roots[0].center == ComplexRational(Rational(2)));
    const RootIsolation b = isolate_roots(poly({1, -2, 2}), 128);
    CHECK(b.roots[0].exact());
    CHECK(b.roots[0].center == ComplexRational(Rational(1), Rational(1)));
  }
  SUBCASE("real roots ascend") {
    const RootIsolation iso = isolate_roots(poly({1, 0, -3, 1}), 128);
    REQUIRE(iso.roots.size() == 3);
    CHECK(iso.roots[0].center.re < iso.roots[1].center.re);
    CHECK(iso.roots[1].center.re < iso.roots[2].center.re);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(isolate_roots(poly({2, 1}), 128), InputError);
    CHECK_THROWS_AS(isolate_roots(poly({1, 0, 0}), 128), InputError);
    CHECK_THROWS_AS(isolate_roots(poly({1, -2, 1}), 128), InputError);
  }
}

TEST_CASE("power sums from newton identities") {
  // roots 1, 2, 3
  const auto s = power_sums(to_rational(poly({1, -6, 11, -6})), 4);
  CHECK(s[0] == 3);
  CHECK(s[1] == 6);
  CHECK(s[2] == 14);
  CHECK(s[3] == 36);
  CHECK(s[4] == 98);
}

TEST_CASE("polynomial printing and sturm counts") {
  CHECK(to_string(poly({1, -1, 2})) == "x^2 - x + 2");
  CHECK(to_string(poly({-1, 0, 1})) == "-x^2 + 1");
  CHECK(real_root_count(poly({1, 0, -3, 1})) == 3);
  CHECK(real_root_count(poly({1, 0, 1})) == 0);
  CHECK(real_root_count(poly({1, -2, 1})) == 1);
}
