#pragma once

// Embedding norm of a lattice with expanding endomorphism.
//
// Coordinates x in Z^n are mapped to sigma_rho(x) = sum_i x_i P_i(rho), one
// value per root rho of the characteristic polynomial. For a base given by
// its minimal polynomial, P_i = X^i (power basis 1, tau, ..., tau^{n-1}),
// so sigma_rho is the field embedding. For a base given as a matrix, the P_i
// are one row of adj(X I - Phi), i.e. sigma_rho is a left eigenvector of Phi.
// Either way sigma_rho(Phi x) = rho sigma_rho(x), and the working norm
//
//     q(x) = sum over all n roots |sigma_rho(x)|^2
//          = sum_j a_j |sigma_j(x)|^2     (a_j = 1 real, 2 complex pair)
//
// has operator norm ||Phi^{-1}|| = max 1/|rho|.

#include "naf/error.hpp"
#include "naf/interval.hpp"
#include "naf/lattice.hpp"
#include "naf/roots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace naf {

struct PrecisionConfig {
  unsigned initial_bits = 128;
  unsigned cap_bits = 4096;
};

struct Embedding {
  RootDisk root;        // enclosure of sigma_j(tau), upper half-plane for complex ones
  unsigned weight = 1;  // a_j
  Interval modulus_sq;  // |sigma_j(tau)|^2; exact when provably an integer
};

/// Quadratic form enclosed between two rational forms: lower <= q <= upper
/// pointwise. All three coincide when the Gram matrix is known exactly.
class NormForm {
 public:
  NormForm() = default;
  explicit NormForm(RatMatrix exact);
  NormForm(RatMatrix center, RatMatrix lower, RatMatrix upper);

  bool exact() const { return exact_; }
  const RatMatrix& center() const { return center_; }
  const RatMatrix& lower() const { return lower_; }
  const RatMatrix& upper() const { return upper_; }
  Interval eval(const IntVector& x) const;
  /// The form x -> q(a x).
  NormForm transformed(const RatMatrix& a) const;

 private:
  RatMatrix center_, lower_, upper_;
  bool exact_ = false;
};

class NumberFieldInstance {
 public:
  /// Monic, degree >= 1, nonzero constant term, no repeated roots.
  static NumberFieldInstance build(const IntPoly& min_poly, PrecisionConfig precision = {});
  /// Matrix base; its characteristic polynomial must be squarefree.
  static NumberFieldInstance from_lattice(const LatticeInstance& lattice, PrecisionConfig precision = {});

  /// Same instance with every enclosure recomputed at twice the precision.
  NumberFieldInstance refined() const;

  const LatticeInstance& lattice() const { return lattice_; }
  const IntPoly& min_poly() const { return lattice_.char_poly(); }
  bool power_basis() const { return power_basis_; }
  std::size_t n() const { return lattice_.n(); }
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }
  const std::vector<Embedding>& embeddings() const { return embeddings_; }
  const RootIsolation& roots() const { return roots_; }
  const std::vector<IntPoly>& coordinate_polys() const { return coordinate_polys_; }
  const NormForm& norm_form() const { return form_; }
  unsigned bits() const { return bits_; }
  const PrecisionConfig& precision() const { return precision_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  NumberFieldInstance(LatticeInstance lattice, std::vector<IntPoly> polys, bool power_basis, PrecisionConfig precision,
                      unsigned bits);
  void compute(unsigned start_bits);

  LatticeInstance lattice_;
  std::vector<IntPoly> coordinate_polys_;
  bool power_basis_ = true;
  PrecisionConfig precision_;
  unsigned bits_ = 0;
  RootIsolation roots_;
  std::vector<Embedding> embeddings_;
  std::size_t s_ = 0, t_ = 0;
  NormForm form_;
  std::vector<std::string> warnings_;
};

/// q(p) through the Gram matrix.
Interval minkowski_norm_sq(const NumberFieldInstance& nf, const LatticePoint& p);
/// q(p) evaluated directly at the root enclosures; independent of the Gram route.
Interval embedding_norm_sq(const NumberFieldInstance& nf, const LatticePoint& p);

/// ||Phi^{-1}||^2 = max 1/|sigma_j|^2. Throws NotExpanding.
Interval inv_operator_norm_sq(const NumberFieldInstance& nf);
Interval inv_operator_norm(const NumberFieldInstance& nf);

/// Runs f(nf), retrying on ever finer instances while it throws Undecided.
template <typename F>
auto with_refinement(const NumberFieldInstance& nf, F&& f) {
  NumberFieldInstance current = nf;
  for (;;) {
    try {
      return f(current);
    } catch (const Undecided& undecided) {
      try {
        current = current.refined();
      } catch (const PrecisionCapExceeded& cap) {
        throw PrecisionCapExceeded(std::string(undecided.what()) + ": " + cap.what());
      }
    }
  }
}

}  // namespace naf
