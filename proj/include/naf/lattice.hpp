#pragma once

// Lattice Z^n with an injective integer endomorphism Phi, and exact
// arithmetic on top of it: powers of Phi, divisibility by Phi^k, residue
// classes modulo Phi^k(Z^n), and the expanding test.

#include "naf/arith.hpp"
#include "naf/poly.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace naf {

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(IntVector coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords);
  static LatticePoint zero(std::size_t n) { return LatticePoint(IntVector(n)); }

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a);
  friend LatticePoint operator*(const Integer& k, const LatticePoint& a);

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

  /// Comma-separated coordinates, e.g. "1,-2".
  std::string str() const;

 private:
  IntVector coords_;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const;
};

class LatticeInstance {
 public:
  /// Throws InputError unless phi is square, non-empty and non-singular.
  explicit LatticeInstance(IntMatrix phi);
  /// Companion matrix of a monic polynomial over the basis 1, x, ..., x^{n-1}:
  /// multiplication by x.
  static LatticeInstance companion(const IntPoly& monic);

  std::size_t n() const { return phi_.rows(); }
  const IntMatrix& phi() const { return phi_; }
  const Integer& det() const { return det_; }
  const IntMatrix& adjugate() const { return adj_; }
  /// det(xI - Phi), monic of degree n.
  const IntPoly& char_poly() const { return char_poly_; }
  /// Faddeev-LeVerrier matrices M_1 = I, ..., M_n with
  /// adj(xI - Phi) = sum_k M_k x^{n-k}.
  const std::vector<IntMatrix>& leverrier() const { return leverrier_; }

 private:
  IntMatrix phi_;
  Integer det_;
  IntMatrix adj_;
  IntPoly char_poly_;
  std::vector<IntMatrix> leverrier_;
};

/// Phi^k(p), k >= 0.
LatticePoint apply_phi(const LatticeInstance& inst, const LatticePoint& p, unsigned k);

/// q with Phi^k(q) = p when p lies in Phi^k(Z^n), otherwise empty.
std::optional<LatticePoint> solve_divisibility(const LatticeInstance& inst, const LatticePoint& p, unsigned k);
bool in_image(const LatticeInstance& inst, const LatticePoint& p, unsigned k = 1);

/// Residue classes of Z^n modulo A(Z^n) for a non-singular A, from a Smith
/// normal form U A V = diag(d_1 | d_2 | ... | d_n).
class ResidueSystem {
 public:
  explicit ResidueSystem(const IntMatrix& a);

  /// Canonical class key: (U p)_i mod d_i.
  IntVector key(const LatticePoint& p) const;
  /// Mixed-radix position of a key in [0, count).
  std::size_t ordinal(const IntVector& key) const;
  std::size_t ordinal(const LatticePoint& p) const { return ordinal(key(p)); }
  std::size_t count() const { return count_; }
  const IntVector& invariants() const { return d_; }
  /// The representative U^{-1} c of the class with key c.
  LatticePoint representative(const IntVector& key) const;
  /// One point per class, ordered by key.
  std::vector<LatticePoint> representatives() const;

 private:
  IntMatrix u_;
  IntMatrix u_inv_;
  IntVector d_;
  std::size_t count_ = 1;
};

/// The representatives of Z^n / Phi^k(Z^n) in class-key order.
std::vector<LatticePoint> residue_system(const LatticeInstance& inst, unsigned k);

IntPoly char_poly(const LatticeInstance& inst);

/// All eigenvalues strictly outside the unit circle, decided exactly.
bool is_expanding(const LatticeInstance& inst);

struct SpectralInfo {
  IntPoly char_poly;
  Rational min_eig_abs_lower;
  /// 1 / min |lambda|; present when char_poly is squarefree, where it is the
  /// operator norm of Phi^{-1} in the eigenvector-adapted working norm.
  std::optional<Rational> max_inv_norm_upper;
};

SpectralInfo spectral_info(const LatticeInstance& inst, unsigned bits = 128);

}  // namespace naf
