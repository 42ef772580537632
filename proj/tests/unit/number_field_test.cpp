#include "doctest.h"

#include "naf/enumerate.hpp"
#include "naf/error.hpp"
#include "naf/number_field.hpp"

#include <complex>
#include <random>

using namespace naf;

namespace {

IntPoly poly(std::initializer_list<long> descending) {
  std::vector<Integer> c;
  for (long v : descending) c.emplace_back(v);
  return IntPoly::from_descending(c);
}

IntMatrix mat(std::size_t n, std::initializer_list<long> rows) {
  std::vector<Integer> d;
  for (long v : rows) d.emplace_back(v);
  return IntMatrix(n, n, d);
}

LatticePoint random_point(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntVector c(n);
  for (auto& v : c) v = dist(rng);
  return LatticePoint(c);
}

bool overlap(const Interval& a, const Interval& b) { return a.lo() <= b.hi() && b.lo() <= a.hi(); }

// Floating-point sum over roots of |sum x_i rho^i|^2 at the disk centres,
// used only as a coarse sanity oracle.
double float_norm(const std::vector<std::complex<double>>& roots, const LatticePoint& p) {
  double total = 0;
  for (const auto& r : roots) {
    std::complex<double> v = 0, pw = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      v += p[i].convert_to<double>() * pw;
      pw *= r;
    }
    total += std::norm(v);
  }
  return total;
}

}  // namespace

TEST_CASE("build") {
  const auto two = NumberFieldInstance::build(poly({1, -2}));
  CHECK(two.n() == 1);
  CHECK(two.s() == 1);
  CHECK(two.t() == 0);
  CHECK(two.lattice().phi() == mat(1, {2}));

  const auto koblitz = NumberFieldInstance::build(poly({1, -1, 2}));
  CHECK(koblitz.s() == 0);
  CHECK(koblitz.t() == 1);
  REQUIRE(koblitz.embeddings().size() == 1);
  CHECK(koblitz.embeddings()[0].weight == 2);
  CHECK(koblitz.embeddings()[0].modulus_sq == Interval(Rational(2)));
  CHECK(koblitz.norm_form().exact());

  const auto gauss = NumberFieldInstance::build(poly({1, -2, 2}));
  CHECK(gauss.embeddings()[0].modulus_sq == Interval(Rational(2)));

  CHECK_THROWS_AS(NumberFieldInstance::build(poly({1, 0, 0})), InputError);
  CHECK_THROWS_AS(NumberFieldInstance::build(poly({2, 0, 1})), InputError);
  CHECK_THROWS_AS(NumberFieldInstance::build(poly({1, -2, 1})), InputError);
}

TEST_CASE("minkowski norm examples") {
  const auto two = NumberFieldInstance::build(poly({1, -2}));
  CHECK(minkowski_norm_sq(two, LatticePoint{3}) == Interval(Rational(9)));
  const auto gauss = NumberFieldInstance::build(poly({1, -2, 2}));
  CHECK(minkowski_norm_sq(gauss, LatticePoint{1, 0}) == Interval(Rational(2)));
  CHECK(minkowski_norm_sq(gauss, LatticePoint{0, 1}) == Interval(Rational(4)));
  // square lattice Gram matrix
  CHECK(gauss.norm_form().center() == RatMatrix(2, 2, {Rational(2), Rational(2), Rational(2), Rational(4)}));
}

TEST_CASE("circle recognition in higher degree") {
  // (x^2 - x + 2)(x^2 + x + 2): all four roots of modulus sqrt 2
  const auto nf = NumberFieldInstance::build(poly({1, 0, 3, 0, 4}));
  CHECK(nf.t() == 2);
  for (const auto& e : nf.embeddings()) CHECK(e.modulus_sq == Interval(Rational(2)));
  CHECK(nf.norm_form().exact());
  CHECK_FALSE(nf.warnings().empty());
  // genus-2 Weil polynomial with q = 2
  const auto genus2 = NumberFieldInstance::build(poly({1, 1, 2, 2, 4}));
  for (const auto& e : genus2.embeddings()) CHECK(e.modulus_sq == Interval(Rational(2)));
  CHECK(genus2.norm_form().exact());
  // x^3 - 2: roots on one circle but |rho|^2 irrational
  const auto cube = NumberFieldInstance::build(poly({1, 0, 0, -2}));
  CHECK_FALSE(cube.norm_form().exact());
  CHECK(cube.warnings().empty());
}

TEST_CASE("gram route and direct route agree") {
  std::mt19937_64 rng(99);
  const std::vector<IntPoly> polys{poly({1, -1, 2}), poly({1, -4, 5}), poly({1, 0, 0, -2}), poly({1, -3, 0, 3}),
                                   poly({1, 1, 2, 2, 4}), poly({1, 0, -3, 1, 5})};
  for (const auto& p : polys) {
    const auto nf = NumberFieldInstance::build(p);
    std::vector<std::complex<double>> roots;
    for (const auto& d : nf.roots().roots)
      roots.emplace_back(d.center.re.convert_to<double>(), d.center.im.convert_to<double>());
    for (int trial = 0; trial < 40; ++trial) {
      const LatticePoint x = random_point(rng, nf.n(), 30);
      const Interval g = minkowski_norm_sq(nf, x);
      const Interval d = embedding_norm_sq(nf, x);
      CHECK(overlap(g, d));
      CHECK(g == minkowski_norm_sq(nf, -x));
      const double f = float_norm(roots, x);
      CHECK(g.lo().convert_to<double>() <= f * (1 + 1e-9) + 1e-9);
      CHECK(g.hi().convert_to<double>() >= f * (1 - 1e-9) - 1e-9);
      if (!x.is_zero()) CHECK(g.lo() > 0);
    }
  }
}

TEST_CASE("phi scales the norm by at least the smallest modulus") {
  std::mt19937_64 rng(3);
  for (const auto& p : {poly({1, -1, 2}), poly({1, -3, 0, 3}), poly({1, 0, 0, -2})}) {
    const auto nf = NumberFieldInstance::build(p);
    Interval lowest;
    for (std::size_t i = 0; i < nf.embeddings().size(); ++i)
      lowest = i == 0 ? nf.embeddings()[i].modulus_sq : min(lowest, nf.embeddings()[i].modulus_sq);
    for (int trial = 0; trial < 40; ++trial) {
      const LatticePoint x = random_point(rng, nf.n(), 40);
      const Interval lhs = minkowski_norm_sq(nf, apply_phi(nf.lattice(), x, 1));
      const Interval rhs = lowest * minkowski_norm_sq(nf, x);
      CHECK(lhs.hi() >= rhs.lo());
    }
  }
}

TEST_CASE("matrix instances use a left-eigenvector norm") {
  const auto nf = NumberFieldInstance::from_lattice(LatticeInstance(mat(2, {2, 1, 0, 3})));
  CHECK(nf.s() == 2);
  CHECK(nf.norm_form().exact());
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const LatticePoint x = random_point(rng, 2, 20);
    CHECK(overlap(minkowski_norm_sq(nf, x), embedding_norm_sq(nf, x)));
  }
  // operator norm of Phi^{-1} is 1/2
  CHECK(inv_operator_norm(nf) == Interval(Rational(1, 2)));
  CHECK_THROWS_AS(NumberFieldInstance::from_lattice(LatticeInstance(mat(2, {2, 0, 0, 2}))), InputError);
}

TEST_CASE("inverse operator norm") {
  CHECK(inv_operator_norm(NumberFieldInstance::build(poly({1, -2}))) == Interval(Rational(1, 2)));
  CHECK(inv_operator_norm(NumberFieldInstance::build(poly({1, -3}))) == Interval(Rational(1, 3)));
  const Interval k = inv_operator_norm(NumberFieldInstance::build(poly({1, -1, 2})));
  CHECK(inv_operator_norm_sq(NumberFieldInstance::build(poly({1, -1, 2}))) == Interval(Rational(1, 2)));
  CHECK(k.lo() * k.lo() <= Rational(1, 2));
  CHECK(k.hi() * k.hi() >= Rational(1, 2));
  CHECK(k.width() < Rational(1, Integer(1) << 100U));
  CHECK_THROWS_AS(inv_operator_norm(NumberFieldInstance::build(poly({1, 0, -3, 1}))), NotExpanding);
}

TEST_CASE("refinement doubles precision and stops at the cap") {
  const auto nf = NumberFieldInstance::build(poly({1, 0, 0, -2}), {128, 256});
  CHECK(nf.bits() == 128);
  const auto finer = nf.refined();
  CHECK(finer.bits() == 256);
  CHECK_THROWS_AS(finer.refined(), PrecisionCapExceeded);
  int calls = 0;
  const unsigned used = with_refinement(nf, [&](const NumberFieldInstance& cur) {
    if (++calls == 1) throw Undecided("first try");
    return cur.bits();
  });
  CHECK(used == 256);
}

TEST_CASE("lattice geometry") {
  const RatMatrix square(2, 2, {Rational(2), Rational(2), Rational(2), Rational(4)});
  CHECK(shortest_vector_sq(square) == 2);
  CHECK(covering_radius_sq_upper(square) == 1);
  // hexagonal lattice, Gram [[2,1],[1,2]]: covering radius^2 = 2/3
  const RatMatrix hex(2, 2, {Rational(2), Rational(1), Rational(1), Rational(2)});
  CHECK(covering_radius_sq_upper(hex) == Rational(2, 3));
  CHECK(shortest_vector_sq(hex) == 2);
  // Z^3 standard: the nearest-plane bound is exact here, 3/4
  CHECK(covering_radius_sq_upper(RatMatrix::identity(3)) == Rational(3, 4));
  const auto pts = enumerate_ellipsoid(square, Rational(4), 1000);
  // brute force over a box
  std::vector<IntVector> brute;
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b) {
      const IntVector x{Integer(a), Integer(b)};
      if (quadratic_value(square, x) <= 4) brute.push_back(x);
    }
  CHECK(pts == brute);
  CHECK_THROWS_AS(enumerate_ellipsoid(square, Rational(10000), 100), SizeCapExceeded);
}
