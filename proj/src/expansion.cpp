#include "naf/expansion.hpp"

#include "naf/error.hpp"

#include <unordered_map>

namespace naf {

LatticePoint digit_of(const DigitSet& ds, const LatticePoint& p) {
  if (in_image(ds.lattice(), p, 1)) return LatticePoint::zero(p.size());
  const LatticePoint* d = ds.representative(p);
  if (d == nullptr) throw MalformedDigitSet("no digit for the residue class of " + p.str());
  return *d;
}

LatticePoint step_T(const DigitSet& ds, const LatticePoint& p) {
  auto q = solve_divisibility(ds.lattice(), p - digit_of(ds, p), 1);
  if (!q) throw MalformedDigitSet("p - d(p) is not divisible by Phi for p = " + p.str());
  return *std::move(q);
}

std::size_t default_max_steps(const DigitSet& ds, const LatticePoint& p) {
  Integer sq(0);
  for (const auto& c : p.coords()) sq += c * c;
  return 64 + ds.w() * bit_length(sq);
}

ExpandResult expand(const DigitSet& ds, const LatticePoint& p, std::size_t max_steps) {
  if (max_steps < 1) throw InputError("max_steps must be >= 1");
  Expansion e;
  e.w = ds.w();
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> seen;
  std::vector<LatticePoint> orbit;
  LatticePoint cur = p;
  std::size_t zeros_due = 0;
  for (std::size_t step = 0; !cur.is_zero(); ++step) {
    if (step >= max_steps) return CycleReport{p, {}, step, true};
    const auto [it, fresh] = seen.emplace(cur, orbit.size());
    if (!fresh) return CycleReport{p, std::vector<LatticePoint>(orbit.begin() + static_cast<long>(it->second), orbit.end()), step, false};
    orbit.push_back(cur);
    const LatticePoint d = digit_of(ds, cur);
    if (!d.is_zero()) {
      if (zeros_due > 0) throw MalformedDigitSet("nonzero digit inside a w-window at " + cur.str());
      zeros_due = ds.w() - 1;
    } else if (zeros_due > 0) {
      --zeros_due;
    }
    auto q = solve_divisibility(ds.lattice(), cur - d, 1);
    if (!q) throw MalformedDigitSet("p - d(p) is not divisible by Phi for p = " + cur.str());
    e.digits.push_back(d);
    cur = *std::move(q);
  }
  return e;
}

LatticePoint value(const LatticeInstance& inst, const Expansion& e) {
  LatticePoint acc = LatticePoint::zero(inst.n());
  for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it) acc = apply_phi(inst, acc, 1) + *it;
  return acc;
}

bool is_wnaf(const Expansion& e) {
  std::size_t last = 0;
  bool any = false;
  for (std::size_t j = 0; j < e.digits.size(); ++j) {
    if (e.digits[j].is_zero()) continue;
    if (any && j - last < e.w) return false;
    last = j;
    any = true;
  }
  return true;
}

std::size_t weight(const Expansion& e) {
  std::size_t k = 0;
  for (const auto& d : e.digits) k += d.is_zero() ? 0 : 1;
  return k;
}

Expansion strip_leading_zeros(Expansion e) {
  while (!e.digits.empty() && e.digits.back().is_zero()) e.digits.pop_back();
  return e;
}

}  // namespace naf
