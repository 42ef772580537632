#include "naf/lattice.hpp"

#include "naf/error.hpp"
#include "naf/roots.hpp"

#include <algorithm>
#include <functional>

namespace naf {

LatticePoint::LatticePoint(std::initializer_list<long> coords) {
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

namespace {

void check_rank(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw InputError("lattice points of different rank");
}

void check_rank(const LatticeInstance& inst, const LatticePoint& p) {
  if (p.size() != inst.n())
    throw InputError("point has " + std::to_string(p.size()) + " coordinates, lattice rank is " +
                     std::to_string(inst.n()));
}

}  // namespace

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  check_rank(a, b);
  IntVector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return LatticePoint(std::move(c));
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  check_rank(a, b);
  IntVector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return LatticePoint(std::move(c));
}

LatticePoint operator-(const LatticePoint& a) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
  return LatticePoint(std::move(c));
}

LatticePoint operator*(const Integer& k, const LatticePoint& a) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a[i];
  return LatticePoint(std::move(c));
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string LatticePoint::str() const { return join(coords_, ","); }

std::size_t LatticePointHash::operator()(const LatticePoint& p) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : p.coords()) {
    // low limb plus sign is enough to spread small coordinates
    const std::size_t v = c.is_zero() ? 0 : static_cast<std::size_t>(mpz_getlimbn(c.backend().data(), 0));
    h ^= (v + static_cast<std::size_t>(c.sign() + 1) * 0x85ebca6bULL) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// Faddeev-LeVerrier over the integers: every division by k is exact.
void faddeev_leverrier(const IntMatrix& a, IntPoly& poly, std::vector<IntMatrix>& ms) {
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  ms.clear();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      m = a * ms.back();
      for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    }
    ms.push_back(m);
    const IntMatrix am = a * m;
    Integer tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  poly = IntPoly(c);
}

}  // namespace

LatticeInstance::LatticeInstance(IntMatrix phi) : phi_(std::move(phi)) {
  if (phi_.rows() == 0 || !phi_.square()) throw InputError("endomorphism matrix must be square and non-empty");
  det_ = determinant(phi_);
  if (det_ == 0) throw InputError("endomorphism matrix is singular (det = 0)");
  faddeev_leverrier(phi_, char_poly_, leverrier_);
  const std::size_t n = phi_.rows();
  adj_ = leverrier_.back();
  if (n % 2 == 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) adj_(i, j) = -adj_(i, j);
}

LatticeInstance LatticeInstance::companion(const IntPoly& monic) {
  if (monic.degree() < 1) throw InputError("minimal polynomial must have degree >= 1");
  if (!monic.is_monic()) throw InputError("minimal polynomial must be monic");
  if (monic.coeffs.front() == 0) throw InputError("minimal polynomial has zero constant term");
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  IntMatrix phi(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) phi(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) phi(i, n - 1) = -monic.coeffs[i];
  return LatticeInstance(std::move(phi));
}

LatticePoint apply_phi(const LatticeInstance& inst, const LatticePoint& p, unsigned k) {
  check_rank(inst, p);
  IntVector v = p.coords();
  for (unsigned i = 0; i < k; ++i) v = inst.phi() * v;
  return LatticePoint(std::move(v));
}

std::optional<LatticePoint> solve_divisibility(const LatticeInstance& inst, const LatticePoint& p, unsigned k) {
  check_rank(inst, p);
  IntVector v = p.coords();
  for (unsigned i = 0; i < k; ++i) {
    IntVector w = inst.adjugate() * v;
    for (auto& c : w) {
      Integer q, r;
      divide_qr(c, inst.det(), q, r);
      if (r != 0) return std::nullopt;
      c = std::move(q);
    }
    v = std::move(w);
  }
  return LatticePoint(std::move(v));
}

bool in_image(const LatticeInstance& inst, const LatticePoint& p, unsigned k) {
  return solve_divisibility(inst, p, k).has_value();
}

ResidueSystem::ResidueSystem(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix m = a;
  u_ = IntMatrix::identity(n);
  u_inv_ = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(m(i, c), m(j, c));
      std::swap(u_(i, c), u_(j, c));
      std::swap(u_inv_(c, i), u_inv_(c, j));
    }
  };
  // row i -= q * row j
  auto sub_row = [&](std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) {
      m(i, c) -= q * m(j, c);
      u_(i, c) -= q * u_(j, c);
      u_inv_(c, j) += q * u_inv_(c, i);
    }
  };
  auto add_row = [&](std::size_t i, std::size_t j) { sub_row(i, j, Integer(-1)); };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) {
      m(i, c) = -m(i, c);
      u_(i, c) = -u_(i, c);
      u_inv_(c, i) = -u_inv_(c, i);
    }
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
  };
  auto sub_col = [&](std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < n; ++r) m(r, i) -= q * m(r, j);
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (m(i, j) != 0 && (pi == n || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw InputError("residue system of a singular matrix");
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m(i, t) == 0) continue;
        sub_row(i, t, floor_div(m(i, t), m(t, t)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m(t, j) == 0) continue;
        sub_col(j, t, floor_div(m(t, j), m(t, t)));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (mod_floor(m(i, j), m(t, t)) != 0) {
            add_row(t, i);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m(t, t) < 0) negate_row(t);
  }

  d_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d_[i] = m(i, i);
    if (static_cast<long double>(count_) * d_[i].convert_to<long double>() > 1e15L)
      throw SizeCapExceeded("residue system too large to index");
    count_ *= d_[i].convert_to<std::size_t>();
  }
}

IntVector ResidueSystem::key(const LatticePoint& p) const {
  IntVector k = u_ * p.coords();
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = mod_floor(k[i], d_[i]);
  return k;
}

std::size_t ResidueSystem::ordinal(const IntVector& key) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < key.size(); ++i) idx = idx * d_[i].convert_to<std::size_t>() + key[i].convert_to<std::size_t>();
  return idx;
}

LatticePoint ResidueSystem::representative(const IntVector& key) const { return LatticePoint(u_inv_ * key); }

std::vector<LatticePoint> ResidueSystem::representatives() const {
  std::vector<LatticePoint> out;
  out.reserve(count_);
  IntVector c(d_.size());
  for (std::size_t idx = 0; idx < count_; ++idx) {
    out.push_back(representative(c));
    for (std::size_t i = c.size(); i-- > 0;) {
      if (++c[i] < d_[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

std::vector<LatticePoint> residue_system(const LatticeInstance& inst, unsigned k) {
  if (k < 1) throw InputError("residue system needs k >= 1");
  return ResidueSystem(matrix_power(inst.phi(), k)).representatives();
}

IntPoly char_poly(const LatticeInstance& inst) { return inst.char_poly(); }

bool is_expanding(const LatticeInstance& inst) { return all_roots_outside_unit_disk(inst.char_poly()); }

SpectralInfo spectral_info(const LatticeInstance& inst, unsigned bits) {
  SpectralInfo info;
  info.char_poly = inst.char_poly();
  const bool squarefree = is_squarefree(info.char_poly);
  const IntPoly p = squarefree ? info.char_poly : squarefree_part(info.char_poly);
  for (unsigned b = bits;; b *= 2) {
    try {
      const RootIsolation iso = isolate_roots(p, b);
      Rational lowest;
      bool exact_min = false;
      for (std::size_t i = 0; i < iso.roots.size(); ++i) {
        const Interval m = iso.roots[i].modulus(b);
        if (i == 0 || m.lo() < lowest) {
          lowest = m.lo();
          exact_min = m.is_exact();
        }
      }
      info.min_eig_abs_lower = lowest;
      if (squarefree && lowest > 0) info.max_inv_norm_upper = exact_min ? 1 / lowest : round_up(1 / lowest, b);
      return info;
    } catch (const Undecided&) {
      if (b >= 8192) throw PrecisionCapExceeded("eigenvalue isolation exceeded 8192 bits");
    }
  }
}

}  // namespace naf
