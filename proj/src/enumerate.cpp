#include "naf/enumerate.hpp"

#include "naf/error.hpp"

#include <algorithm>
#include <functional>

namespace naf {

Rational quadratic_value(const RatMatrix& g, const IntVector& x) {
  Rational acc(0);
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < n; ++j)
      if (x[j] != 0) row += g(i, j) * x[j];
    acc += row * x[i];
  }
  return acc;
}

namespace {

// g = L D L^T with L unit lower triangular; throws unless g is positive definite.
void ldl(const RatMatrix& g, RatMatrix& l, std::vector<Rational>& d) {
  const std::size_t n = g.rows();
  l = RatMatrix::identity(n);
  d.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational di = g(i, i);
    for (std::size_t k = 0; k < i; ++k) di -= l(i, k) * l(i, k) * d[k];
    if (di <= 0) throw Error("quadratic form is not positive definite");
    d[i] = di;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = g(j, i);
      for (std::size_t k = 0; k < i; ++k) v -= l(j, k) * l(i, k) * d[k];
      l(j, i) = v / di;
    }
  }
}

}  // namespace

bool is_positive_definite(const RatMatrix& g) {
  RatMatrix l;
  std::vector<Rational> d;
  try {
    ldl(g, l, d);
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<IntVector> enumerate_ellipsoid(const RatMatrix& g, const Rational& bound, std::size_t cap) {
  const std::size_t n = g.rows();
  std::vector<IntVector> out;
  if (bound < 0) return out;
  RatMatrix l;
  std::vector<Rational> d;
  ldl(g, l, d);

  // q(x) = sum_i d_i (x_i + c_i)^2 with c_i = sum_{j>i} l_ji x_j.
  IntVector x(n);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t level, const Rational& budget) {
    const std::size_t i = level - 1;
    Rational c(0);
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) c += l(j, i) * x[j];
    const Rational s = sqrt_upper(budget / d[i], 32);
    const Integer lo = ceil(-c - s), hi = floor(-c + s);
    for (Integer v = lo; v <= hi; ++v) {
      const Rational y = c + v;
      const Rational used = d[i] * y * y;
      if (used > budget) continue;
      x[i] = v;
      if (i == 0) {
        out.push_back(x);
        if (out.size() > cap)
          throw SizeCapExceeded("ellipsoid enumeration exceeded " + std::to_string(cap) + " points");
      } else {
        rec(i, budget - used);
      }
    }
    x[i] = 0;
  };
  rec(n, bound);
  std::sort(out.begin(), out.end());
  return out;
}

Rational shortest_vector_sq(const RatMatrix& g) {
  const IntMatrix b = lll_basis(g);
  const std::size_t n = g.rows();
  // Enumerate in the reduced basis; its first vector bounds the minimum.
  const RatMatrix bq = to_rational(b);
  const RatMatrix gb = bq.transposed() * g * bq;
  Rational best = gb(0, 0);
  for (std::size_t i = 1; i < n; ++i) best = std::min(best, gb(i, i));
  for (const auto& x : enumerate_ellipsoid(gb, best, 1'000'000)) {
    bool zero = std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
    if (!zero) best = std::min(best, quadratic_value(gb, x));
  }
  return best;
}

namespace {

Rational dot(const RatMatrix& g, const RatVector& u, const RatVector& v) {
  Rational acc(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) acc += u[i] * g(i, j) * v[j];
  }
  return acc;
}

RatVector column(const IntMatrix& b, std::size_t j) {
  RatVector v(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) v[i] = b(i, j);
  return v;
}

void gram_schmidt(const RatMatrix& g, const IntMatrix& b, RatMatrix& mu, std::vector<Rational>& bstar_sq) {
  const std::size_t n = b.cols();
  std::vector<RatVector> bs;
  mu = RatMatrix(n, n);
  bstar_sq.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    const RatVector bi = column(b, i);
    RatVector v = bi;
    for (std::size_t j = 0; j < i; ++j) {
      mu(i, j) = dot(g, bi, bs[j]) / bstar_sq[j];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= mu(i, j) * bs[j][k];
    }
    bstar_sq[i] = dot(g, v, v);
    bs.push_back(std::move(v));
  }
}

}  // namespace

IntMatrix lll_basis(const RatMatrix& g) {
  const std::size_t n = g.rows();
  IntMatrix b = IntMatrix::identity(n);
  RatMatrix mu;
  std::vector<Rational> bs;
  gram_schmidt(g, b, mu, bs);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const Integer q = floor(mu(k, j) + Rational(1, 2));
      if (q == 0) continue;
      for (std::size_t i = 0; i < n; ++i) b(i, k) -= q * b(i, j);
      gram_schmidt(g, b, mu, bs);
    }
    if (bs[k] >= (Rational(3, 4) - mu(k, k - 1) * mu(k, k - 1)) * bs[k - 1]) {
      ++k;
    } else {
      for (std::size_t i = 0; i < n; ++i) std::swap(b(i, k), b(i, k - 1));
      gram_schmidt(g, b, mu, bs);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

Rational covering_radius_sq_upper(const RatMatrix& g) {
  const std::size_t n = g.rows();
  if (n == 1) return g(0, 0) / 4;
  if (n == 2) {
    // Lagrange reduction, then the Voronoi vertex is the circumcentre of 0, b1, b2.
    RatVector b1{Rational(1), Rational(0)}, b2{Rational(0), Rational(1)};
    auto q = [&](const RatVector& u) { return dot(g, u, u); };
    if (q(b2) < q(b1)) std::swap(b1, b2);
    for (;;) {
      const Integer m = floor(dot(g, b1, b2) / q(b1) + Rational(1, 2));
      for (std::size_t i = 0; i < 2; ++i) b2[i] -= Rational(m) * b1[i];
      if (q(b2) >= q(b1)) break;
      std::swap(b1, b2);
    }
    if (dot(g, b1, b2) < 0)
      for (auto& c : b2) c = -c;
    const RatVector diff{b1[0] - b2[0], b1[1] - b2[1]};
    const Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    return q(b1) * q(b2) * q(diff) / (4 * det);
  }
  const IntMatrix b = lll_basis(g);
  RatMatrix mu;
  std::vector<Rational> bs;
  gram_schmidt(g, b, mu, bs);
  Rational sum(0);
  for (const auto& v : bs) sum += v;
  return sum / 4;
}

}  // namespace naf
