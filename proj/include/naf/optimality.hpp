#pragma once

// Minimal weight of w-NAF expansions.
//
// check_hypotheses evaluates the sufficient conditions under which every
// w-NAF expansion has minimal weight among all expansions over the same
// digits. The oracles compute that minimal weight directly, by 0-1
// breadth-first search over the transitions a -> Phi^{-1}(a - eta), eta a digit
// congruent to a modulo Phi, costing 1 for a nonzero eta.

#include "naf/digit_set.hpp"
#include "naf/number_field.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace naf {

struct OptimalityCertificate {
  bool v_symmetric = false;           // V = -V
  bool v_in_phi_v = false;            // V inside Phi(V)
  bool inv_norm_below_ratio = false;  // ||Phi^-1|| < r/R
  bool w_large_enough = false;        // ||Phi^-1||^w < (r/R - ||Phi^-1||) / 2
  Interval lhs;                       // ||Phi^-1||^w
  Interval rhs;                       // (r/R - ||Phi^-1||) / 2
  bool certified() const { return v_symmetric && v_in_phi_v && inv_norm_below_ratio && w_large_enough; }
};

/// Conditions are decided on squared quantities; throws Undecided when the
/// context is too coarse and InputError for a custom digit set.
OptimalityCertificate check_hypotheses(const NormContext& ctx, const DigitSet& ds);
/// As above, refining the instance until decided.
OptimalityCertificate check_hypotheses(const NumberFieldInstance& nf, const DigitSet& ds);

/// Least number of nonzero digits in any expansion of p over ds. Searches the
/// region q <= max(q(p), norm_cap^2), norm_cap defaulting to twice the orbit
/// radius, and throws SizeCapExceeded if an orbit leaves it.
std::size_t min_weight_oracle(const DigitSet& ds, const NumberFieldInstance& nf, const LatticePoint& p,
                              std::optional<Rational> norm_cap = std::nullopt);

/// Minimal weights of every point with lower(q) <= bound_sq, computed backwards
/// from 0. The region must be large enough to be closed under forward steps,
/// which holds once bound_sq is at least the squared orbit radius.
class WeightTable {
 public:
  WeightTable(const DigitSet& ds, const NumberFieldInstance& nf, const Rational& bound_sq);
  std::optional<std::size_t> lookup(const LatticePoint& p) const;
  std::size_t size() const { return dist_.size(); }

 private:
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> dist_;
};

struct WeightViolation {
  LatticePoint point;
  std::size_t wnaf_weight = 0;
  std::size_t min_weight = 0;
};

struct EmpiricalOptions {
  std::size_t full_limit = 400'000;  // larger balls are sampled
  std::size_t sample_size = 2000;
  std::size_t cross_checks = 8;      // table entries re-derived by the forward oracle
  std::size_t ball_cap = 5'000'000;
};

struct EmpiricalReport {
  std::size_t points = 0;  // points compared
  std::size_t ball_size = 0;
  bool sampled = false;
  std::vector<WeightViolation> violations;
  std::vector<LatticePoint> expand_failures;
  std::size_t cross_checked = 0;
  std::size_t cross_mismatches = 0;  // table and forward oracle disagree; indicates a bug
};

/// Compares w-NAF weight with the minimal weight for every point of working
/// norm at most radius (or a seeded sample of them).
EmpiricalReport verify_empirically(const DigitSet& ds, const NumberFieldInstance& nf, const Rational& radius,
                                   std::uint64_t seed, EmpiricalOptions options = {});

}  // namespace naf
