#include "naf/number_field.hpp"

#include "naf/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace naf {

NormForm::NormForm(RatMatrix exact) : center_(exact), lower_(exact), upper_(std::move(exact)), exact_(true) {}

NormForm::NormForm(RatMatrix center, RatMatrix lower, RatMatrix upper)
    : center_(std::move(center)), lower_(std::move(lower)), upper_(std::move(upper)), exact_(false) {}

Interval NormForm::eval(const IntVector& x) const {
  if (exact_) return Interval(quadratic_value(center_, x));
  return {quadratic_value(lower_, x), quadratic_value(upper_, x)};
}

NormForm NormForm::transformed(const RatMatrix& a) const {
  const RatMatrix at = a.transposed();
  if (exact_) return NormForm(at * center_ * a);
  return NormForm(at * center_ * a, at * lower_ * a, at * upper_ * a);
}

namespace {

Rational abs_upper(const ComplexRational& z, unsigned bits) { return sqrt_upper(z.norm_sq(), bits); }

bool disks_disjoint(const ComplexRational& c1, const Rational& r1, const ComplexRational& c2, const Rational& r2) {
  const Rational s = r1 + r2;
  return s * s < (c1 - c2).norm_sq();
}

std::size_t partner(std::size_t i, std::size_t s) {
  if (i < s) return i;
  return (i - s) % 2 == 0 ? i + 1 : i - 1;
}

// Enclosure of |rho_i|^2, exact when |rho_i|^2 is provably the integer c
// nearest the centre: then c / rho_i is a root, and it is shown to be the
// conjugate of rho_i by locating it in the conjugate's disk.
Interval modulus_sq(const IntPoly& p, const RootIsolation& iso, std::size_t i, std::size_t s) {
  const unsigned bits = iso.bits;
  const RootDisk& d = iso.roots[i];
  if (d.exact()) return Interval(d.center.norm_sq());
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const Interval m = d.modulus(bits);
  const Interval enclosure = m * m;
  if (n == 2 && !d.real) return Interval(Rational(p.coeffs[0]));  // rho * conj(rho) = constant term

  const Integer c = floor(d.center.norm_sq() + Rational(1, 2));
  if (c < 1 || !enclosure.contains(Rational(c))) return enclosure;

  // h(x) = x^n p(c/x) has the roots c / rho.
  std::vector<Rational> hc(n + 1);
  Integer ck(1);
  for (std::size_t k = 0; k <= n; ++k) {
    hc[n - k] = Rational(p.coeffs[k] * ck);
    ck *= c;
  }
  const RatPoly g = gcd(to_rational(p), RatPoly(hc));
  if (g.degree() < 1) return enclosure;

  std::size_t candidates = 0;
  bool i_candidate = false;
  for (std::size_t j = 0; j < n; ++j) {
    const RootDisk& dj = iso.roots[j];
    const Rational value_sq = g(dj.center).norm_sq();
    const Rational err = evaluation_error(g, dj, bits);
    if (err * err < value_sq) continue;  // g has no root in this disk
    ++candidates;
    if (j == i) i_candidate = true;
  }
  if (candidates != static_cast<std::size_t>(g.degree()) || !i_candidate) return enclosure;

  // c / D_i: centre c / z, radius c r / (|z|_lo (|z|_lo - r)).
  const Rational zlo = sqrt_lower(d.center.norm_sq(), bits);
  if (zlo <= d.radius) return enclosure;
  const ComplexRational image = ComplexRational(Rational(c)) / d.center;
  const Rational image_r = Rational(c) * d.radius / (zlo * (zlo - d.radius));
  const std::size_t conj = partner(i, s);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == conj) continue;
    if (!disks_disjoint(image, image_r, iso.roots[j].center, iso.roots[j].radius)) return enclosure;
  }
  return Interval(Rational(c));
}

RatMatrix exact_gram_real(const IntPoly& p, const std::vector<RatPoly>& polys) {
  const std::size_t n = polys.size();
  const std::vector<Rational> sums = power_sums(to_rational(p), 2 * n);
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const RatPoly prod = polys[i] * polys[k];
      Rational acc(0);
      for (std::size_t m = 0; m < prod.coeffs.size(); ++m) acc += prod.coeffs[m] * sums[m];
      g(i, k) = acc;
    }
  return g;
}

// Every root satisfies conj(rho) = c / rho.
RatMatrix exact_gram_circle(const IntPoly& p, const std::vector<RatPoly>& polys, const Integer& c) {
  const std::size_t n = polys.size();
  const std::vector<Rational> pos = power_sums(to_rational(p), 2 * n);
  RatPoly rev = to_rational(reversed(p));
  const Rational a0 = rev.leading();
  for (auto& v : rev.coeffs) v /= a0;
  const std::vector<Rational> neg = power_sums(rev, 2 * n);
  auto s = [&](long m) { return m >= 0 ? pos[static_cast<std::size_t>(m)] : neg[static_cast<std::size_t>(-m)]; };
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Rational acc(0);
      for (std::size_t a = 0; a < polys[i].coeffs.size(); ++a) {
        if (polys[i].coeffs[a] == 0) continue;
        Rational cb(1);
        for (std::size_t b = 0; b < polys[k].coeffs.size(); ++b) {
          if (b > 0) cb *= c;
          if (polys[k].coeffs[b] == 0) continue;
          acc += polys[i].coeffs[a] * polys[k].coeffs[b] * cb * s(static_cast<long>(a) - static_cast<long>(b));
        }
      }
      g(i, k) = acc;
    }
  return g;
}

NormForm interval_gram(const RootIsolation& iso, const std::vector<RatPoly>& polys) {
  const std::size_t n = polys.size();
  const unsigned bits = iso.bits;
  RatMatrix center(n, n);
  Rational worst(0);
  std::vector<ComplexRational> v(n);
  std::vector<Rational> e(n), mag(n);
  RatMatrix err(n, n);
  for (const RootDisk& d : iso.roots) {
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = polys[i](d.center);
      e[i] = evaluation_error(polys[i], d, bits);
      mag[i] = abs_upper(v[i], bits);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        // Re(v_i conj(v_k)); imaginary parts cancel across conjugate pairs.
        center(i, k) += v[i].re * v[k].re + v[i].im * v[k].im;
        err(i, k) += e[i] * (mag[k] + e[k]) + mag[i] * e[k];
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, err(i, k));
  // |x^T (G - C) x| <= worst (sum |x_i|)^2 <= n worst |x|^2
  const Rational shift = worst * static_cast<long>(n);
  RatMatrix lo = center, hi = center;
  for (std::size_t i = 0; i < n; ++i) {
    lo(i, i) -= shift;
    hi(i, i) += shift;
  }
  if (!is_positive_definite(lo)) throw Undecided("embedding norm enclosure too wide to be definite");
  return NormForm(center, lo, hi);
}

// Searches products of root subsets for an integral factor, verified by exact division.
std::vector<std::string> reducibility_warnings(const IntPoly& p, const RootIsolation& iso, std::size_t s) {
  const std::size_t n = iso.roots.size();
  if (n < 2) return {};
  std::vector<std::vector<std::size_t>> units;  // real roots alone, complex roots with their conjugate
  for (std::size_t i = 0; i < n; ++i) {
    if (i < s) units.push_back({i});
    else if ((i - s) % 2 == 0) units.push_back({i, i + 1});
  }
  if (units.size() > 16) return {"irreducibility not checked (degree too large)"};
  const std::size_t total = std::size_t{1} << units.size();
  for (std::size_t mask = 1; mask + 1 < total; ++mask) {
    std::vector<std::complex<long double>> roots;
    for (std::size_t u = 0; u < units.size(); ++u)
      if (mask >> u & 1)
        for (std::size_t i : units[u])
          roots.emplace_back(iso.roots[i].center.re.convert_to<long double>(),
                             iso.roots[i].center.im.convert_to<long double>());
    if (2 * roots.size() > n) continue;
    std::vector<std::complex<long double>> f{1.0L};
    for (const auto& z : roots) {
      std::vector<std::complex<long double>> next(f.size() + 1);
      for (std::size_t k = 0; k < f.size(); ++k) {
        next[k + 1] += f[k];
        next[k] -= z * f[k];
      }
      f = std::move(next);
    }
    std::vector<Integer> coeffs;
    bool integral = true;
    for (const auto& c : f) {
      const long double r = std::round(c.real());
      if (std::fabs(c.real() - r) > 1e-6L * std::max(1.0L, std::fabs(r)) || std::fabs(r) > 9e15L) {
        integral = false;
        break;
      }
      coeffs.emplace_back(static_cast<long long>(r));
    }
    if (!integral) continue;
    const IntPoly factor(coeffs);
    if (remainder_monic(p, factor).is_zero())
      return {"polynomial " + to_string(p) + " is reducible: divisible by " + to_string(factor)};
  }
  return {};
}

// c^T adj(xI - Phi) for the first c whose components have no common root.
std::vector<IntPoly> eigen_row_polys(const LatticeInstance& lattice) {
  const std::size_t n = lattice.n();
  const auto& ms = lattice.leverrier();
  const RatPoly p = to_rational(lattice.char_poly());
  auto row_polys = [&](const IntVector& c) {
    std::vector<IntPoly> out;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> coeffs(n);
      for (std::size_t k = 1; k <= n; ++k) {
        Integer acc(0);
        for (std::size_t r = 0; r < n; ++r) acc += c[r] * ms[k - 1](r, i);
        coeffs[n - k] = acc;
      }
      out.emplace_back(coeffs);
    }
    return out;
  };
  std::vector<IntVector> choices;
  for (std::size_t r = 0; r < n; ++r) {
    IntVector c(n);
    c[r] = 1;
    choices.push_back(c);
  }
  for (long k = 2; k < 8; ++k) {
    IntVector c(n);
    for (std::size_t r = 0; r < n; ++r) c[r] = 1 + (static_cast<long>(r) * k) % 5;
    choices.push_back(c);
  }
  for (const auto& c : choices) {
    const std::vector<IntPoly> polys = row_polys(c);
    RatPoly g = p;
    for (const auto& q : polys) g = gcd(g, to_rational(q));
    if (g.degree() == 0) return polys;
  }
  throw InputError("could not find a left eigenvector row for every eigenvalue");
}

std::vector<IntPoly> power_polys(std::size_t n) {
  std::vector<IntPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> c(i + 1);
    c[i] = 1;
    out.emplace_back(c);
  }
  return out;
}

}  // namespace

NumberFieldInstance::NumberFieldInstance(LatticeInstance lattice, std::vector<IntPoly> polys, bool power_basis,
                                         PrecisionConfig precision, unsigned bits)
    : lattice_(std::move(lattice)), coordinate_polys_(std::move(polys)), power_basis_(power_basis), precision_(precision) {
  compute(bits);
}

NumberFieldInstance NumberFieldInstance::build(const IntPoly& min_poly, PrecisionConfig precision) {
  if (min_poly.degree() < 1) throw InputError("minimal polynomial must have degree >= 1");
  if (!min_poly.is_monic()) throw InputError("minimal polynomial must be monic, got " + to_string(min_poly));
  if (min_poly.coeffs.front() == 0) throw InputError("minimal polynomial has zero constant term (not injective)");
  if (!is_squarefree(min_poly)) throw InputError("minimal polynomial has repeated roots");
  LatticeInstance lattice = LatticeInstance::companion(min_poly);
  const std::size_t n = lattice.n();
  return NumberFieldInstance(std::move(lattice), power_polys(n), true, precision, precision.initial_bits);
}

NumberFieldInstance NumberFieldInstance::from_lattice(const LatticeInstance& lattice, PrecisionConfig precision) {
  if (!is_squarefree(lattice.char_poly()))
    throw InputError("characteristic polynomial " + to_string(lattice.char_poly()) +
                     " has repeated roots; no eigenvector norm");
  return NumberFieldInstance(lattice, eigen_row_polys(lattice), false, precision, precision.initial_bits);
}

NumberFieldInstance NumberFieldInstance::refined() const {
  const unsigned next = bits_ * 2;
  if (next > precision_.cap_bits)
    throw PrecisionCapExceeded("comparison undecided at " + std::to_string(bits_) + " bits; cap is " +
                               std::to_string(precision_.cap_bits) + " bits");
  return NumberFieldInstance(lattice_, coordinate_polys_, power_basis_, precision_, next);
}

void NumberFieldInstance::compute(unsigned start_bits) {
  const IntPoly& p = lattice_.char_poly();
  const std::size_t n = p.coeffs.size() - 1;
  std::vector<RatPoly> polys;
  for (const auto& q : coordinate_polys_) polys.push_back(to_rational(q));
  for (unsigned b = start_bits;; b *= 2) {
    if (b > precision_.cap_bits)
      throw PrecisionCapExceeded("root isolation needs more than the cap of " + std::to_string(precision_.cap_bits) +
                                 " bits");
    try {
      roots_ = isolate_roots(p, b);
      bits_ = b;
      s_ = 0;
      for (const auto& d : roots_.roots) s_ += d.real ? 1 : 0;
      t_ = (n - s_) / 2;
      embeddings_.clear();
      std::vector<Interval> all_moduli;
      for (std::size_t i = 0; i < n; ++i) {
        const Interval m = modulus_sq(p, roots_, i, s_);
        all_moduli.push_back(m);
        const RootDisk& d = roots_.roots[i];
        if (d.real) embeddings_.push_back({d, 1, m});
        else if (d.center.im > 0) embeddings_.push_back({d, 2, m});
      }
      const bool circle = std::all_of(all_moduli.begin(), all_moduli.end(), [&](const Interval& m) {
        return m.is_exact() && m.lo() == all_moduli.front().lo();
      });
      if (t_ == 0) {
        form_ = NormForm(exact_gram_real(p, polys));
      } else if (circle && denominator(all_moduli.front().lo()) == 1) {
        form_ = NormForm(exact_gram_circle(p, polys, numerator(all_moduli.front().lo())));
      } else {
        form_ = interval_gram(roots_, polys);
      }
      warnings_ = reducibility_warnings(p, roots_, s_);
      return;
    } catch (const Undecided&) {
      // retry at higher precision
    }
  }
}

Interval minkowski_norm_sq(const NumberFieldInstance& nf, const LatticePoint& p) {
  if (p.size() != nf.n()) throw InputError("point rank does not match the instance");
  return nf.norm_form().eval(p.coords());
}

Interval embedding_norm_sq(const NumberFieldInstance& nf, const LatticePoint& p) {
  if (p.size() != nf.n()) throw InputError("point rank does not match the instance");
  const unsigned bits = nf.bits();
  std::vector<RatPoly> polys;
  for (const auto& q : nf.coordinate_polys()) polys.push_back(to_rational(q));
  Interval total(0L);
  for (const RootDisk& d : nf.roots().roots) {
    ComplexRational v(0L);
    Rational e(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      v = v + ComplexRational(Rational(p[i])) * polys[i](d.center);
      e += Rational(abs(p[i])) * evaluation_error(polys[i], d, bits);
    }
    if (e == 0) {
      total = total + Interval(v.norm_sq());
      continue;
    }
    Rational lo = sqrt_lower(v.norm_sq(), bits) - e;
    if (lo < 0) lo = 0;
    const Rational hi = sqrt_upper(v.norm_sq(), bits) + e;
    total = total + Interval(lo * lo, hi * hi);
  }
  return total;
}

Interval inv_operator_norm_sq(const NumberFieldInstance& nf) {
  if (!is_expanding(nf.lattice()))
    throw NotExpanding("characteristic polynomial " + to_string(nf.min_poly()) + " has a root with |lambda| <= 1");
  Interval best;
  bool first = true;
  for (const auto& e : nf.embeddings()) {
    const Interval inv = Interval(1L) / e.modulus_sq;
    best = first ? inv : max(best, inv);
    first = false;
  }
  return best;
}

Interval inv_operator_norm(const NumberFieldInstance& nf) { return sqrt(inv_operator_norm_sq(nf), nf.bits()); }

}  // namespace naf
