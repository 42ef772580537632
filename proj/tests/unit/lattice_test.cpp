#include "doctest.h"

#include "naf/error.hpp"
#include "naf/lattice.hpp"
#include "naf/roots.hpp"

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

// Hand multiplication, independent of Matrix::operator*.
LatticePoint multiply_by_hand(const IntMatrix& m, const LatticePoint& p) {
  IntVector out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) out[i] += m(i, j) * p[j];
  return LatticePoint(out);
}

LatticePoint random_point(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntVector c(n);
  for (auto& v : c) v = dist(rng);
  return LatticePoint(c);
}

}  // namespace

TEST_CASE("apply_phi") {
  const LatticeInstance two(mat(1, {2}));
  CHECK(apply_phi(two, LatticePoint{3}, 2) == LatticePoint{12});
  CHECK(apply_phi(two, LatticePoint{3}, 0) == LatticePoint{3});
  const LatticeInstance koblitz = LatticeInstance::companion(poly({1, -1, 2}));
  CHECK(koblitz.phi() == mat(2, {0, -2, 1, 1}));
  CHECK(apply_phi(koblitz, LatticePoint{1, 0}, 1) == multiply_by_hand(koblitz.phi(), LatticePoint{1, 0}));
  CHECK(apply_phi(koblitz, LatticePoint{1, 0}, 1) == LatticePoint{0, 1});
  // tau^2 = tau - 2
  CHECK(apply_phi(koblitz, LatticePoint{1, 0}, 2) == LatticePoint{-2, 1});
  CHECK_THROWS_AS(apply_phi(koblitz, LatticePoint{1}, 1), InputError);
}

TEST_CASE("solve_divisibility") {
  const LatticeInstance two(mat(1, {2}));
  CHECK(solve_divisibility(two, LatticePoint{6}, 1) == LatticePoint{3});
  CHECK_FALSE(solve_divisibility(two, LatticePoint{7}, 1).has_value());

  const LatticeInstance koblitz = LatticeInstance::companion(poly({1, -1, 2}));
  const LatticePoint target{2, 0};
  std::vector<LatticePoint> brute;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      if (multiply_by_hand(koblitz.phi(), LatticePoint{a, b}) == target) brute.push_back(LatticePoint{a, b});
  REQUIRE(brute.size() == 1);
  CHECK(solve_divisibility(koblitz, target, 1) == brute.front());
}

TEST_CASE("singular and malformed matrices are rejected") {
  CHECK_THROWS_AS(LatticeInstance(mat(2, {1, 2, 2, 4})), InputError);
  CHECK_THROWS_AS(LatticeInstance(IntMatrix(2, 3)), InputError);
  CHECK_THROWS_AS(LatticeInstance::companion(poly({1, 1, 0})), InputError);
  CHECK_THROWS_AS(LatticeInstance::companion(poly({2, 1, 1})), InputError);
}

TEST_CASE("char_poly") {
  CHECK(char_poly(LatticeInstance(mat(1, {2}))) == poly({1, -2}));
  CHECK(char_poly(LatticeInstance::companion(poly({1, -1, 2}))) == poly({1, -1, 2}));
  CHECK(char_poly(LatticeInstance(mat(2, {0, -2, 1, 0}))) == poly({1, 0, 2}));
  const LatticeInstance m(mat(3, {2, 1, 0, 0, 3, 1, 1, 0, 4}));
  CHECK(m.char_poly().coeffs.front() == -m.det());
  // adj(Phi) Phi = det I
  const IntMatrix prod = m.adjugate() * m.phi();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(prod(i, j) == (i == j ? m.det() : Integer(0)));
}

TEST_CASE("residue systems") {
  SUBCASE("examples") {
    const LatticeInstance two(mat(1, {2}));
    const auto r = residue_system(two, 2);
    REQUIRE(r.size() == 4);
    for (long v = 0; v < 4; ++v) CHECK(r[static_cast<std::size_t>(v)] == LatticePoint{v});
    CHECK(residue_system(LatticeInstance::companion(poly({1, -1, 2})), 1).size() == 2);
    CHECK(residue_system(LatticeInstance(mat(1, {3})), 1).size() == 3);
  }
  SUBCASE("completeness and incongruence") {
    std::mt19937_64 rng(11);
    const std::vector<LatticeInstance> instances{
        LatticeInstance::companion(poly({1, -1, 2})), LatticeInstance::companion(poly({1, -4, 5})),
        LatticeInstance(mat(2, {2, 1, 0, 3})), LatticeInstance(mat(3, {2, 1, 0, 0, 3, 1, 1, 0, 4}))};
    for (const auto& inst : instances)
      for (unsigned k = 1; k <= 2; ++k) {
        const auto reps = residue_system(inst, k);
        CHECK(Integer(reps.size()) == pow(Rational(abs(inst.det())), k));
        for (std::size_t i = 0; i < reps.size(); ++i)
          for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(in_image(inst, reps[i] - reps[j], k));
        for (int trial = 0; trial < 20; ++trial) {
          const LatticePoint p = random_point(rng, inst.n(), 50);
          int hits = 0;
          for (const auto& r : reps) hits += in_image(inst, p - r, k) ? 1 : 0;
          CHECK(hits == 1);
        }
      }
  }
}

TEST_CASE("divisibility roundtrip") {
  std::mt19937_64 rng(5);
  const LatticeInstance inst(mat(3, {2, 1, 0, 0, 3, 1, 1, 0, 4}));
  for (int trial = 0; trial < 50; ++trial) {
    const LatticePoint p = random_point(rng, 3, 1000);
    const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    CHECK(solve_divisibility(inst, apply_phi(inst, p, k), k) == p);
  }
}

TEST_CASE("expanding test") {
  CHECK_FALSE(is_expanding(LatticeInstance(IntMatrix::identity(2))));
  CHECK(is_expanding(LatticeInstance::companion(poly({1, -1, 2}))));
  CHECK(is_expanding(LatticeInstance(mat(1, {2}))));
  CHECK_FALSE(is_expanding(LatticeInstance::companion(poly({1, 0, -1}))));
  CHECK_FALSE(is_expanding(LatticeInstance::companion(poly({1, 0, 1}))));  // |i| = 1
  CHECK_FALSE(is_expanding(LatticeInstance(mat(1, {-1}))));
}

TEST_CASE("expanding test agrees with certified root isolation on random matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> entry(-4, 4);
  int compared = 0;
  for (int trial = 0; trial < 400 && compared < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    if (determinant(m) == 0) continue;
    const LatticeInstance inst(m);
    const IntPoly sqf = squarefree_part(inst.char_poly());
    RootIsolation iso;
    try {
      iso = isolate_roots(sqf, 256);
    } catch (const Undecided&) {
      continue;
    }
    bool outside = true, decided = true;
    for (const auto& d : iso.roots) {
      // half-width of the modulus enclosure is far below 1e-12
      const Interval mod = d.modulus(256);
      CHECK(mod.width() < Rational(1, 1000000000000LL));
      if (mod.lo() > 1) continue;
      if (mod.hi() < 1) outside = false;
      else decided = false;
    }
    if (!decided) {
      // a root on the unit circle: Schur-Cohn must say "not expanding"
      CHECK_FALSE(is_expanding(inst));
      ++compared;
      continue;
    }
    CHECK(is_expanding(inst) == outside);
    ++compared;
  }
  CHECK(compared >= 50);
}

TEST_CASE("spectral info") {
  const SpectralInfo info = spectral_info(LatticeInstance::companion(poly({1, -1, 2})));
  CHECK(info.min_eig_abs_lower * info.min_eig_abs_lower <= 2);
  CHECK(info.min_eig_abs_lower * info.min_eig_abs_lower > Rational(199, 100));
  REQUIRE(info.max_inv_norm_upper.has_value());
  CHECK(*info.max_inv_norm_upper * *info.max_inv_norm_upper >= Rational(1, 2));
  const SpectralInfo two = spectral_info(LatticeInstance(mat(1, {2})));
  CHECK(two.min_eig_abs_lower == 2);
  CHECK(two.max_inv_norm_upper == Rational(1, 2));
  CHECK_FALSE(spectral_info(LatticeInstance(mat(2, {2, 0, 0, 2}))).max_inv_norm_upper.has_value());
}
