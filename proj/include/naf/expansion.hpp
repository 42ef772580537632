#pragma once

// Digit map d, backward division T(a) = Phi^{-1}(a - d(a)), and w-NAF words.
// Words are stored least significant digit first.

#include "naf/digit_set.hpp"
#include "naf/lattice.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace naf {

struct Expansion {
  std::vector<LatticePoint> digits;  // digits[j] multiplies Phi^j
  unsigned w = 1;
};

/// Why expand stopped without reaching zero.
struct CycleReport {
  LatticePoint start;
  std::vector<LatticePoint> cycle;  // T maps each entry to the next, the last back to the first
  std::size_t steps = 0;            // iterations performed
  bool step_limit = false;          // max_steps ran out before any repetition
};

using ExpandResult = std::variant<Expansion, CycleReport>;

/// 0 on Phi(Lambda), otherwise the digit congruent to p modulo Phi^w.
LatticePoint digit_of(const DigitSet& ds, const LatticePoint& p);
LatticePoint step_T(const DigitSet& ds, const LatticePoint& p);

/// 64 + w * bit_length(|p|^2), |p| the coordinate Euclidean length.
std::size_t default_max_steps(const DigitSet& ds, const LatticePoint& p);

ExpandResult expand(const DigitSet& ds, const LatticePoint& p, std::size_t max_steps);
inline ExpandResult expand(const DigitSet& ds, const LatticePoint& p) {
  return expand(ds, p, default_max_steps(ds, p));
}

/// sum_j Phi^j(digits[j]) by Horner's rule.
LatticePoint value(const LatticeInstance& inst, const Expansion& e);
bool is_wnaf(const Expansion& e);
std::size_t weight(const Expansion& e);
/// Drops trailing (most significant) zero digits.
Expansion strip_leading_zeros(Expansion e);

}  // namespace naf
