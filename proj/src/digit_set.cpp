#include "naf/digit_set.hpp"

#include "naf/enumerate.hpp"
#include "naf/error.hpp"

#include <algorithm>

namespace naf {

namespace {

constexpr std::size_t kCandidateCap = 5'000'000;

Integer nonzero_class_count(const Integer& det, unsigned w) {
  const Integer a = abs(det);
  Integer hi(1), lo(1);
  for (unsigned i = 0; i < w; ++i) hi *= a;
  for (unsigned i = 0; i + 1 < w; ++i) lo *= a;
  return hi - lo;
}

RatMatrix inverse_power(const LatticeInstance& lattice, unsigned w) {
  const IntMatrix adj_w = matrix_power(lattice.adjugate(), w);
  Integer det_w(1);
  for (unsigned i = 0; i < w; ++i) det_w *= lattice.det();
  RatMatrix a(lattice.n(), lattice.n());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = Rational(adj_w(i, j), det_w);
  return a;
}

}  // namespace

std::string to_string(DigitFamily family) {
  switch (family) {
    case DigitFamily::minimal_norm: return "minimal-norm";
    case DigitFamily::rational_interval: return "rational-interval";
    case DigitFamily::custom: return "custom";
  }
  return "custom";
}

DigitSet DigitSet::from_digits(const LatticeInstance& lattice, unsigned w, std::vector<LatticePoint> digits,
                               DigitFamily family) {
  if (w < 1) throw InputError("window width w must be >= 1");
  DigitSet ds;
  ds.lattice_ = std::make_shared<const LatticeInstance>(lattice);
  ds.classes_ = std::make_shared<const ResidueSystem>(matrix_power(lattice.phi(), w));
  ds.w_ = w;
  ds.family_ = family;

  const std::size_t n = lattice.n();
  for (const auto& d : digits)
    if (d.size() != n) throw MalformedDigitSet("digit " + d.str() + " has the wrong rank");
  if (std::none_of(digits.begin(), digits.end(), [](const LatticePoint& d) { return d.is_zero(); }))
    digits.push_back(LatticePoint::zero(n));
  std::sort(digits.begin(), digits.end());
  if (std::adjacent_find(digits.begin(), digits.end()) != digits.end())
    throw MalformedDigitSet("digit set lists a digit twice");

  ds.by_class_.assign(ds.classes_->count(), -1);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const LatticePoint& d = digits[i];
    if (d.is_zero()) continue;
    if (in_image(lattice, d, 1)) throw MalformedDigitSet("nonzero digit " + d.str() + " lies in Phi(Lambda)");
    const std::size_t cls = ds.classes_->ordinal(d);
    if (ds.by_class_[cls] >= 0)
      throw MalformedDigitSet("digits " + digits[static_cast<std::size_t>(ds.by_class_[cls])].str() + " and " +
                              d.str() + " are congruent modulo Phi^w");
    ds.by_class_[cls] = static_cast<long>(i);
  }
  const Integer expected = nonzero_class_count(lattice.det(), w);
  if (Integer(digits.size() - 1) != expected)
    throw MalformedDigitSet("expected " + expected.str() + " nonzero digits, got " + std::to_string(digits.size() - 1));
  ds.digits_ = std::move(digits);
  return ds;
}

std::vector<LatticePoint> DigitSet::nonzero_digits() const {
  std::vector<LatticePoint> out;
  for (const auto& d : digits_)
    if (!d.is_zero()) out.push_back(d);
  return out;
}

bool DigitSet::contains(const LatticePoint& p) const { return std::binary_search(digits_.begin(), digits_.end(), p); }

const LatticePoint* DigitSet::representative(const LatticePoint& p) const {
  const long idx = by_class_[classes_->ordinal(p)];
  return idx < 0 ? nullptr : &digits_[static_cast<std::size_t>(idx)];
}

DigitSet DigitSet::with_replacement(const LatticePoint& old_digit, const LatticePoint& replacement) const {
  if (old_digit.is_zero() || !contains(old_digit)) throw InputError(old_digit.str() + " is not a nonzero digit");
  if (classes_->key(old_digit) != classes_->key(replacement))
    throw MalformedDigitSet("replacement " + replacement.str() + " is not congruent to " + old_digit.str());
  std::vector<LatticePoint> digits = digits_;
  *std::find(digits.begin(), digits.end(), old_digit) = replacement;
  return from_digits(*lattice_, w_, std::move(digits), DigitFamily::custom);
}

NormContext norm_context(const NumberFieldInstance& nf) {
  NormContext ctx;
  ctx.bits = nf.bits();
  const NormForm& form = nf.norm_form();
  ctx.r_sq = shortest_vector_sq(form.lower()) / 4;
  ctx.R_sq = covering_radius_sq_upper(form.upper());
  ctx.R_exact = form.exact() && nf.n() <= 2;
  ctx.r = sqrt(Interval(ctx.r_sq), ctx.bits);
  ctx.R = sqrt(Interval(ctx.R_sq), ctx.bits);
  ctx.inv_norm_sq = inv_operator_norm_sq(nf);
  ctx.inv_norm = sqrt(ctx.inv_norm_sq, ctx.bits);
  return ctx;
}

Interval scaled_norm_sq(const NumberFieldInstance& nf, const LatticePoint& p, unsigned w) {
  return nf.norm_form().transformed(inverse_power(nf.lattice(), w)).eval(p.coords());
}

DigitSet build_minimal_norm(const NumberFieldInstance& nf0, unsigned w) {
  if (w < 1) throw InputError("window width w must be >= 1");
  if (!is_expanding(nf0.lattice())) throw NotExpanding("minimal-norm digits need an expanding base");
  return with_refinement(nf0, [w](const NumberFieldInstance& nf) {
    const LatticeInstance& lattice = nf.lattice();
    const NormForm scaled = nf.norm_form().transformed(inverse_power(lattice, w));
    // Every class meets Phi^w(V), and V lies in the ball of radius R.
    const Rational bound = covering_radius_sq_upper(nf.norm_form().upper());
    const ResidueSystem classes(matrix_power(lattice.phi(), w));
    std::vector<long> best(classes.count(), -1);
    std::vector<Interval> best_value(classes.count());
    const std::vector<IntVector> candidates = enumerate_ellipsoid(scaled.lower(), bound, kCandidateCap);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const LatticePoint alpha(candidates[i]);
      if (in_image(lattice, alpha, 1)) continue;
      const std::size_t cls = classes.ordinal(alpha);
      const Interval value = scaled.eval(alpha.coords());
      if (best[cls] < 0) {
        best[cls] = static_cast<long>(i);
        best_value[cls] = value;
        continue;
      }
      // candidates arrive in lexicographic order, so ties keep the earlier one
      const LatticePoint incumbent(candidates[static_cast<std::size_t>(best[cls])]);
      if (alpha == -incumbent) continue;  // equal norms, even when the form is only enclosed
      switch (compare(value, best_value[cls])) {
        case Order::less:
          best[cls] = static_cast<long>(i);
          best_value[cls] = value;
          break;
        case Order::equal:
        case Order::greater: break;
        case Order::unknown: throw Undecided("cannot order " + alpha.str() + " and " + incumbent.str());
      }
    }
    std::vector<LatticePoint> digits;
    for (long idx : best)
      if (idx >= 0) digits.emplace_back(candidates[static_cast<std::size_t>(idx)]);
    return DigitSet::from_digits(lattice, w, std::move(digits), DigitFamily::minimal_norm);
  });
}

DigitSet build_rational_interval(const LatticeInstance& lattice, unsigned w) {
  if (lattice.n() != 1) throw InputError("the interval digit set needs a rank-1 base");
  if (w < 1) throw InputError("window width w must be >= 1");
  const Integer tau = lattice.phi()(0, 0);
  if (abs(tau) < 2) throw InputError("the interval digit set needs |tau| >= 2");
  Integer m(1);
  for (unsigned i = 0; i < w; ++i) m *= abs(tau);
  // -m/2 < d <= m/2
  const Integer lo = floor_div(-m, Integer(2)) + 1;
  const Integer hi = floor_div(m, Integer(2));
  std::vector<LatticePoint> digits;
  for (Integer d = lo; d <= hi; ++d)
    if (mod_floor(d, tau) != 0) digits.push_back(LatticePoint(IntVector{d}));
  return DigitSet::from_digits(lattice, w, std::move(digits), DigitFamily::rational_interval);
}

unsigned w0_bound(const NumberFieldInstance& nf0) {
  return with_refinement(nf0, [](const NumberFieldInstance& nf) {
    const Interval u_sq = inv_operator_norm_sq(nf);
    const Interval quarter(Rational(1, 4));
    Interval power = u_sq;
    for (unsigned w = 1;; ++w, power = power * u_sq) {
      switch (compare(power, quarter)) {
        case Order::less: return w;
        case Order::equal:
        case Order::greater: break;
        case Order::unknown: throw Undecided("cannot compare ||Phi^-1||^w with 1/2");
      }
      if (w > 100000) throw Error("w0 search did not terminate");
    }
  });
}

unsigned tiling_w_bound(const NormContext& ctx) {
  if (!certainly_less(ctx.inv_norm_sq, Interval(1L))) throw NotExpanding("tiling bound needs ||Phi^-1|| < 1");
  const Interval threshold_lhs_factor = ctx.r + ctx.R;
  Interval power = ctx.inv_norm;
  for (unsigned w = 1;; ++w, power = power * ctx.inv_norm) {
    // ||Phi^-1||^w (r + R) < r
    switch (compare(power * threshold_lhs_factor, ctx.r)) {
      case Order::less: return w;
      case Order::equal:
      case Order::greater: break;
      case Order::unknown: throw Undecided("cannot decide the tiling inequality");
    }
    if (w > 100000) throw Error("tiling bound search did not terminate");
  }
}

unsigned tiling_w_bound(const NumberFieldInstance& nf) {
  return with_refinement(nf, [](const NumberFieldInstance& cur) { return tiling_w_bound(norm_context(cur)); });
}

}  // namespace naf
