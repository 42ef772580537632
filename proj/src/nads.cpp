#include "naf/nads.hpp"

#include "naf/enumerate.hpp"
#include "naf/error.hpp"
#include "naf/expansion.hpp"

#include <algorithm>
#include <unordered_map>

namespace naf {

std::string to_string(NadsStatus status) {
  switch (status) {
    case NadsStatus::certified_by_bound: return "certified_by_bound";
    case NadsStatus::verified_by_search: return "verified_by_search";
    case NadsStatus::counterexample: return "counterexample";
  }
  return "?";
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::tiling: return "tiling";
    case BoundKind::minimal_norm: return "minimal_norm";
    case BoundKind::embedding_moduli: return "embedding_moduli";
  }
  return "?";
}

std::optional<NadsVerdict> certify(const DigitSet& ds, const NormContext& ctx, const NumberFieldInstance& nf) {
  if (ds.family() == DigitFamily::custom) return std::nullopt;
  if (!is_expanding(nf.lattice())) return std::nullopt;
  NadsVerdict v;
  v.status = NadsStatus::certified_by_bound;
  if (ds.family() == DigitFamily::minimal_norm) {
    const unsigned w0 = w0_bound(nf);
    if (ds.w() >= w0) {
      v.bound_used = nf.power_basis() ? BoundKind::embedding_moduli : BoundKind::minimal_norm;
      v.threshold_w = w0;
      return v;
    }
  }
  unsigned tw = 0;
  try {
    tw = tiling_w_bound(ctx);
  } catch (const Undecided&) {
    try {
      tw = tiling_w_bound(nf);
    } catch (const PrecisionCapExceeded&) {
      return std::nullopt;
    }
  }
  if (ds.w() < tw) return std::nullopt;
  v.bound_used = BoundKind::tiling;
  v.threshold_w = tw;
  return v;
}

Rational orbit_radius_sq(const DigitSet& ds, const NumberFieldInstance& nf) {
  const Rational u = inv_operator_norm(nf).hi();
  if (u >= 1) throw NotExpanding("||Phi^-1|| is not certified below 1");
  Rational digit_sq(0);
  for (const auto& d : ds.digits()) digit_sq = std::max(digit_sq, minkowski_norm_sq(nf, d).hi());
  const Rational factor = u / (1 - u);
  return round_up(factor * factor * digit_sq, 64);
}

NadsVerdict search(const DigitSet& ds, const NumberFieldInstance& nf, SearchOptions options) {
  if (!is_expanding(nf.lattice())) throw NotExpanding("search needs an expanding base");
  NadsVerdict verdict;
  const Rational m_sq = orbit_radius_sq(ds, nf);
  verdict.M = sqrt_upper(m_sq, 64);
  const std::vector<IntVector> ball = enumerate_ellipsoid(nf.norm_form().lower(), m_sq, options.ball_cap);
  verdict.ball_size = ball.size();

  enum class Mark { active, zero, periodic };
  std::unordered_map<LatticePoint, Mark, LatticePointHash> memo;
  std::optional<std::vector<LatticePoint>> witness;
  std::vector<LatticePoint> path;
  for (const auto& start : ball) {
    LatticePoint cur(start);
    if (memo.count(cur)) continue;
    path.clear();
    Mark outcome;
    for (;;) {
      if (cur.is_zero()) {
        outcome = Mark::zero;
        break;
      }
      const auto it = memo.find(cur);
      if (it != memo.end()) {
        if (it->second == Mark::active) {
          // back on this walk: a cycle
          const auto pos = std::find(path.begin(), path.end(), cur);
          if (!witness) {
            std::vector<LatticePoint> cycle(pos, path.end());
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            witness = std::move(cycle);
          }
          outcome = Mark::periodic;
        } else {
          outcome = it->second;
        }
        break;
      }
      memo.emplace(cur, Mark::active);
      path.push_back(cur);
      cur = step_T(ds, cur);
    }
    for (const auto& p : path) memo[p] = outcome;
  }

  if (witness) {
    if (!validate_cycle(ds, *witness)) throw Error("internal: search produced an invalid cycle");
    verdict.status = NadsStatus::counterexample;
    verdict.witness = std::move(*witness);
  } else {
    verdict.status = NadsStatus::verified_by_search;
  }
  return verdict;
}

bool validate_cycle(const DigitSet& ds, const std::vector<LatticePoint>& cycle) {
  if (cycle.empty()) return false;
  bool outside = false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i].size() != ds.lattice().n() || cycle[i].is_zero()) return false;
    if (!in_image(ds.lattice(), cycle[i], 1)) outside = true;
    if (step_T(ds, cycle[i]) != cycle[(i + 1) % cycle.size()]) return false;
  }
  return outside;
}

}  // namespace naf
