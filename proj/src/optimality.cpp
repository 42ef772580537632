#include "naf/optimality.hpp"

#include "naf/enumerate.hpp"
#include "naf/error.hpp"
#include "naf/expansion.hpp"
#include "naf/nads.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace naf {

namespace {

// ||Phi^-1||^k, exact whenever ||Phi^-1||^2 is.
Interval inv_norm_power(const NormContext& ctx, unsigned k) {
  Interval p = pow(ctx.inv_norm_sq, k / 2);
  return k % 2 ? p * ctx.inv_norm : p;
}

bool decide(Order o, bool allow_equal, const char* what) {
  switch (o) {
    case Order::less: return true;
    case Order::equal: return allow_equal;
    case Order::greater: return false;
    case Order::unknown: break;
  }
  throw Undecided(std::string("cannot decide ") + what);
}

// Integer form s * q_lower with the region bound scaled to match.
struct IntegerForm {
  IntMatrix g;
  Integer bound;

  IntegerForm(const RatMatrix& form, const Rational& bound_sq) : g(form.rows(), form.cols()) {
    Integer scale(1);
    for (std::size_t i = 0; i < form.rows(); ++i)
      for (std::size_t j = 0; j < form.cols(); ++j) {
        const Integer den = denominator(form(i, j));
        scale = scale / gcd(scale, den) * den;
      }
    for (std::size_t i = 0; i < form.rows(); ++i)
      for (std::size_t j = 0; j < form.cols(); ++j) g(i, j) = numerator(form(i, j) * scale);
    bound = floor(bound_sq * scale);
  }

  IntVector apply(const IntVector& x) const {
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) out[i] += g(i, j) * x[j];
    return out;
  }
  Integer value(const IntVector& x) const { return dot(x, apply(x)); }
  static Integer dot(const IntVector& a, const IntVector& b) {
    Integer acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  }
};

// Phi^{-1}(a) for a in Phi(Lambda).
LatticePoint divide_exact(const LatticeInstance& inst, const LatticePoint& a) {
  const IntMatrix& adj = inst.adjugate();
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer acc(0);
    for (std::size_t j = 0; j < a.size(); ++j) acc += adj(i, j) * a[j];
    out[i] = acc / inst.det();
  }
  return LatticePoint(std::move(out));
}

}  // namespace

OptimalityCertificate check_hypotheses(const NormContext& ctx, const DigitSet& ds) {
  if (ds.family() == DigitFamily::custom)
    throw InputError("optimality conditions apply to minimal-norm and interval digit sets only");
  OptimalityCertificate c;
  c.v_symmetric = true;  // a Voronoi cell about the origin
  const Interval u_sq = ctx.inv_norm_sq;
  const Interval R_sq(ctx.R_sq), r_sq(ctx.r_sq);
  c.v_in_phi_v = decide(compare(u_sq * R_sq, r_sq), true, "||Phi^-1|| R <= r");
  c.inv_norm_below_ratio = decide(compare(u_sq * R_sq, r_sq), false, "||Phi^-1|| R < r");
  // (2 u^w + u)^2 R^2 < r^2, written as u^2 (2 u^{w-1} + 1)^2 R^2
  const Interval factor = Interval(2L) * inv_norm_power(ctx, ds.w() - 1) + Interval(1L);
  c.w_large_enough = decide(compare(u_sq * factor * factor * R_sq, r_sq), false, "the window condition");
  c.lhs = inv_norm_power(ctx, ds.w());
  c.rhs = (ctx.r / ctx.R - ctx.inv_norm) / Interval(2L);
  return c;
}

OptimalityCertificate check_hypotheses(const NumberFieldInstance& nf, const DigitSet& ds) {
  return with_refinement(nf, [&ds](const NumberFieldInstance& cur) { return check_hypotheses(norm_context(cur), ds); });
}

std::size_t min_weight_oracle(const DigitSet& ds, const NumberFieldInstance& nf, const LatticePoint& p,
                              std::optional<Rational> norm_cap) {
  const LatticeInstance& inst = nf.lattice();
  const Rational cap_sq = norm_cap ? *norm_cap * *norm_cap : 4 * orbit_radius_sq(ds, nf);
  const Rational bound_sq = std::max(cap_sq, minkowski_norm_sq(nf, p).hi());
  const IntegerForm form(nf.norm_form().lower(), bound_sq);

  const ResidueSystem mod_phi(inst.phi());
  std::vector<std::vector<LatticePoint>> by_class(mod_phi.count());
  for (const auto& d : ds.nonzero_digits()) by_class[mod_phi.ordinal(d)].push_back(d);

  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> dist;
  std::deque<LatticePoint> queue;
  dist[p] = 0;
  queue.push_back(p);
  auto relax = [&](const LatticePoint& next, std::size_t d, bool front) {
    if (form.value(next.coords()) > form.bound)
      throw SizeCapExceeded("minimal-weight search left its region at " + next.str());
    const auto it = dist.find(next);
    if (it != dist.end() && it->second <= d) return;
    dist[next] = d;
    if (front) queue.push_front(next);
    else queue.push_back(next);
  };
  while (!queue.empty()) {
    const LatticePoint a = queue.front();
    queue.pop_front();
    const std::size_t d = dist[a];
    if (a.is_zero()) return d;
    const std::size_t cls = mod_phi.ordinal(a);
    if (by_class[cls].empty()) {
      relax(divide_exact(inst, a), d, true);
      continue;
    }
    for (const auto& eta : by_class[cls]) relax(divide_exact(inst, a - eta), d + 1, false);
  }
  throw Error("no expansion of " + p.str() + " over this digit set exists");
}

WeightTable::WeightTable(const DigitSet& ds, const NumberFieldInstance& nf, const Rational& bound_sq) {
  const LatticeInstance& inst = nf.lattice();
  const IntegerForm form(nf.norm_form().lower(), bound_sq);
  const std::vector<LatticePoint>& digits = ds.digits();
  std::vector<IntVector> g_digit;
  std::vector<Integer> q_digit;
  for (const auto& d : digits) {
    g_digit.push_back(form.apply(d.coords()));
    q_digit.push_back(IntegerForm::dot(d.coords(), g_digit.back()));
  }

  const LatticePoint origin = LatticePoint::zero(inst.n());
  std::deque<LatticePoint> queue{origin};
  dist_[origin] = 0;
  while (!queue.empty()) {
    const LatticePoint b = queue.front();
    queue.pop_front();
    const std::size_t d = dist_[b];
    // predecessors a = Phi(b) + eta: q(a) = q(y) + 2 <Gy, eta> + q(eta)
    const LatticePoint y = apply_phi(inst, b, 1);
    const IntVector gy = form.apply(y.coords());
    const Integer qy = IntegerForm::dot(y.coords(), gy);
    for (std::size_t k = 0; k < digits.size(); ++k) {
      const bool zero = digits[k].is_zero();
      if (zero && b.is_zero()) continue;
      if (qy + 2 * IntegerForm::dot(gy, digits[k].coords()) + q_digit[k] > form.bound) continue;
      LatticePoint a = y + digits[k];
      const std::size_t nd = d + (zero ? 0 : 1);
      const auto it = dist_.find(a);
      if (it != dist_.end() && it->second <= nd) continue;
      dist_[a] = nd;
      if (zero) queue.push_front(std::move(a));
      else queue.push_back(std::move(a));
    }
  }
}

std::optional<std::size_t> WeightTable::lookup(const LatticePoint& p) const {
  const auto it = dist_.find(p);
  if (it == dist_.end()) return std::nullopt;
  return it->second;
}

EmpiricalReport verify_empirically(const DigitSet& ds, const NumberFieldInstance& nf, const Rational& radius,
                                   std::uint64_t seed, EmpiricalOptions options) {
  EmpiricalReport report;
  const Rational radius_sq = radius * radius;
  const std::vector<IntVector> ball = enumerate_ellipsoid(nf.norm_form().lower(), radius_sq, options.ball_cap);
  report.ball_size = ball.size();
  std::mt19937_64 rng(seed);

  auto compare_point = [&](const LatticePoint& p, std::size_t min_weight) {
    ++report.points;
    const auto r = expand(ds, p);
    if (!std::holds_alternative<Expansion>(r)) {
      report.expand_failures.push_back(p);
      return;
    }
    const std::size_t wt = weight(std::get<Expansion>(r));
    if (wt != min_weight) report.violations.push_back({p, wt, min_weight});
  };

  if (ball.size() <= options.full_limit) {
    const Rational m_sq = orbit_radius_sq(ds, nf);
    const WeightTable table(ds, nf, std::max(radius_sq, 4 * m_sq));
    for (const auto& c : ball) {
      const LatticePoint p(c);
      const auto min_weight = table.lookup(p);
      if (!min_weight) throw Error("internal: " + p.str() + " missing from the weight table");
      compare_point(p, *min_weight);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    for (std::size_t i = 0; i < options.cross_checks && !ball.empty(); ++i) {
      const LatticePoint p(ball[pick(rng)]);
      ++report.cross_checked;
      if (min_weight_oracle(ds, nf, p) != *table.lookup(p)) ++report.cross_mismatches;
    }
    return report;
  }

  report.sampled = true;
  std::vector<std::size_t> order(ball.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t k = std::min(options.sample_size, order.size());
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
    std::swap(order[i], order[pick(rng)]);
    const LatticePoint p(ball[order[i]]);
    compare_point(p, min_weight_oracle(ds, nf, p));
  }
  return report;
}

}  // namespace naf
