#pragma once

// Deciding whether a digit set is a w-NADS.
//
// certify applies the sufficient norm inequalities. search is complete: with
// u = ||Phi^{-1}|| < 1 and M~ the largest digit norm, ||T(b)|| < ||b|| whenever
// ||b|| > M = u M~ / (1 - u), so every nonzero cycle of T lies in the ball of
// radius M, which is finite and enumerated exactly.

#include "naf/digit_set.hpp"
#include "naf/number_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace naf {

enum class NadsStatus { certified_by_bound, verified_by_search, counterexample };
/// tiling: ||Phi^-1||^w < 1/(1 + R/r). minimal_norm: w >= w0 for a minimal-norm
/// set. embedding_moduli: the same condition read off |sigma_j(tau)| for a
/// base given by its minimal polynomial.
enum class BoundKind { tiling, minimal_norm, embedding_moduli };

std::string to_string(NadsStatus status);
std::string to_string(BoundKind kind);

struct NadsVerdict {
  NadsStatus status = NadsStatus::verified_by_search;
  std::vector<LatticePoint> witness;     // counterexample cycle, starting at its smallest point
  std::optional<BoundKind> bound_used;   // certified_by_bound only
  std::optional<unsigned> threshold_w;   // least w the bound accepts
  std::optional<Rational> M;             // search radius, an upper bound
  std::size_t ball_size = 0;             // lattice points examined by search
};

/// Empty when the applicable inequality is false or undecided at the cap.
std::optional<NadsVerdict> certify(const DigitSet& ds, const NormContext& ctx, const NumberFieldInstance& nf);

struct SearchOptions {
  std::size_t ball_cap = 5'000'000;
};

/// Upper bound on M^2 for the digit set.
Rational orbit_radius_sq(const DigitSet& ds, const NumberFieldInstance& nf);

NadsVerdict search(const DigitSet& ds, const NumberFieldInstance& nf, SearchOptions options = {});

/// Nonempty, no zero entry, some entry outside Phi(Lambda), and T maps each
/// entry to its cyclic successor.
bool validate_cycle(const DigitSet& ds, const std::vector<LatticePoint>& cycle);

}  // namespace naf
