#pragma once

// Digit sets D = D* + {0}: one nonzero digit per residue class modulo
// Phi^w(Lambda) outside Phi(Lambda). Two families are built here, minimal-norm
// digits (per class, minimise the working norm of Phi^{-w} alpha) and the
// integer interval digits for n = 1; anything else enters as `custom`.

#include "naf/interval.hpp"
#include "naf/lattice.hpp"
#include "naf/number_field.hpp"

#include <memory>
#include <string>
#include <vector>

namespace naf {

enum class DigitFamily { minimal_norm, rational_interval, custom };
std::string to_string(DigitFamily family);

class DigitSet {
 public:
  /// Checks the residue-system contract and throws MalformedDigitSet on any
  /// violation. Zero is added when absent.
  static DigitSet from_digits(const LatticeInstance& lattice, unsigned w, std::vector<LatticePoint> digits,
                              DigitFamily family = DigitFamily::custom);

  const LatticeInstance& lattice() const { return *lattice_; }
  unsigned w() const { return w_; }
  DigitFamily family() const { return family_; }
  /// Sorted lexicographically, zero included.
  const std::vector<LatticePoint>& digits() const { return digits_; }
  std::vector<LatticePoint> nonzero_digits() const;
  std::size_t size() const { return digits_.size(); }
  bool contains(const LatticePoint& p) const;
  /// Residue classes modulo Phi^w.
  const ResidueSystem& classes() const { return *classes_; }
  /// The nonzero digit congruent to p modulo Phi^w, or nullptr if that class
  /// has none (it is then contained in Phi(Lambda)).
  const LatticePoint* representative(const LatticePoint& p) const;

  /// Copy with one nonzero digit swapped for a congruent point; family becomes custom.
  DigitSet with_replacement(const LatticePoint& old_digit, const LatticePoint& replacement) const;

 private:
  DigitSet() = default;

  std::shared_ptr<const LatticeInstance> lattice_;
  std::shared_ptr<const ResidueSystem> classes_;
  unsigned w_ = 1;
  DigitFamily family_ = DigitFamily::custom;
  std::vector<LatticePoint> digits_;
  std::vector<long> by_class_;  // class ordinal -> index into digits_, -1 if none
};

/// Bounds ball(r) within V within ball(R) for the Voronoi cell V of Z^n in the
/// working norm, together with ||Phi^{-1}||. Radii are kept squared and exact
/// where possible; r_sq is a lower bound and R_sq an upper bound.
struct NormContext {
  Rational r_sq;
  Rational R_sq;
  bool R_exact = false;  // R_sq is the covering radius itself
  Interval r, R;
  Interval inv_norm_sq;
  Interval inv_norm;
  unsigned bits = 0;
};

NormContext norm_context(const NumberFieldInstance& nf);

/// Minimal-norm digit set modulo Phi^w; ties go to the lexicographically
/// smallest coordinates. Throws NotExpanding, PrecisionCapExceeded.
DigitSet build_minimal_norm(const NumberFieldInstance& nf, unsigned w);

/// Integers d with -|tau|^w/2 < d <= |tau|^w/2 not divisible by tau, plus 0.
DigitSet build_rational_interval(const LatticeInstance& lattice, unsigned w);

/// Least w with ||Phi^{-1}||^w < 1/2.
unsigned w0_bound(const NumberFieldInstance& nf);

/// Least w with ||Phi^{-1}||^w < 1 / (1 + R/r). Throws Undecided when the
/// context's enclosures cannot separate the two sides.
unsigned tiling_w_bound(const NormContext& ctx);
/// As above, refining the instance until decided.
unsigned tiling_w_bound(const NumberFieldInstance& nf);

/// Working norm of Phi^{-w}(p), squared.
Interval scaled_norm_sq(const NumberFieldInstance& nf, const LatticePoint& p, unsigned w);

}  // namespace naf
