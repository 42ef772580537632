#include "naf/poly.hpp"

#include <stdexcept>

namespace naf {

namespace mp = boost::multiprecision;

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs.size());
  for (const auto& a : p.coeffs) c.emplace_back(a);
  return RatPoly(std::move(c));
}

IntPoly derivative(const IntPoly& p) {
  std::vector<Integer> c;
  for (std::size_t k = 1; k < p.coeffs.size(); ++k) c.push_back(p.coeffs[k] * static_cast<long>(k));
  return IntPoly(std::move(c));
}

RatPoly derivative(const RatPoly& p) {
  std::vector<Rational> c;
  for (std::size_t k = 1; k < p.coeffs.size(); ++k) c.push_back(p.coeffs[k] * static_cast<long>(k));
  return RatPoly(std::move(c));
}

IntPoly reversed(const IntPoly& p) { return IntPoly(std::vector<Integer>(p.coeffs.rbegin(), p.coeffs.rend())); }

namespace {

template <typename T>
Poly<T> multiply(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<T> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return Poly<T>(std::move(c));
}

template <typename T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b, int sign) {
  std::vector<T> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + T(sign) * b.coeff(i);
  return Poly<T>(std::move(c));
}

RatPoly make_monic(RatPoly p) {
  if (p.is_zero()) return p;
  const Rational lead = p.leading();
  for (auto& c : p.coeffs) c /= lead;
  return p;
}

}  // namespace

IntPoly operator*(const IntPoly& a, const IntPoly& b) { return multiply(a, b); }
IntPoly operator+(const IntPoly& a, const IntPoly& b) { return add(a, b, 1); }
IntPoly operator-(const IntPoly& a, const IntPoly& b) { return add(a, b, -1); }
RatPoly operator*(const RatPoly& a, const RatPoly& b) { return multiply(a, b); }
RatPoly operator-(const RatPoly& a, const RatPoly& b) { return add(a, b, -1); }

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  if (a.degree() < b.degree()) {
    q = RatPoly();
    return;
  }
  std::vector<Rational> qc(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    const Rational f = r.leading() / b.leading();
    qc[shift] = f;
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k + shift] -= f * b.coeffs[k];
    r.trim();
  }
  q = RatPoly(std::move(qc));
}

RatPoly remainder(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  divmod(a, b, q, r);
  return r;
}

IntPoly remainder_monic(const IntPoly& a, const IntPoly& monic) {
  if (!monic.is_monic()) throw std::invalid_argument("remainder_monic needs a monic divisor");
  IntPoly r = a;
  const int d = monic.degree();
  while (!r.is_zero() && r.degree() >= d) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - d);
    const Integer f = r.leading();
    for (std::size_t k = 0; k < monic.coeffs.size(); ++k) r.coeffs[k + shift] -= f * monic.coeffs[k];
    r.trim();
  }
  return r;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

bool is_squarefree(const IntPoly& p) {
  const RatPoly rp = to_rational(p);
  return gcd(rp, derivative(rp)).degree() == 0;
}

IntPoly squarefree_part(const IntPoly& monic) {
  const RatPoly rp = to_rational(monic);
  const RatPoly g = gcd(rp, derivative(rp));
  RatPoly q, r;
  divmod(rp, g, q, r);
  std::vector<Integer> c;
  for (const auto& a : q.coeffs) {
    if (mp::denominator(a) != 1) throw std::logic_error("squarefree part is not integral");
    c.push_back(mp::numerator(a));
  }
  return IntPoly(std::move(c));
}

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t real_root_count(const IntPoly& p) {
  if (p.degree() <= 0) return 0;
  const RatPoly rp = to_rational(p);
  RatPoly sqf, rem;
  divmod(rp, gcd(rp, derivative(rp)), sqf, rem);
  std::vector<RatPoly> seq{sqf, derivative(sqf)};
  while (seq.back().degree() > 0) {
    RatPoly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    for (auto& c : r.coeffs) c = -c;
    seq.push_back(std::move(r));
  }
  std::vector<int> at_minus, at_plus;
  for (const auto& q : seq) {
    const int lead = sign_of(q.leading());
    at_plus.push_back(lead);
    at_minus.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_minus) - sign_changes(at_plus);
}

bool all_roots_inside_unit_disk(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  IntPoly f = p;
  while (f.degree() > 0) {
    const Integer& a0 = f.coeffs.front();
    const Integer& an = f.coeffs.back();
    if (abs(an) <= abs(a0)) return false;
    // g(x) = (a_n f(x) - a_0 f*(x)) / x keeps the root count inside the disk.
    const std::size_t n = f.coeffs.size() - 1;
    std::vector<Integer> g(n);
    for (std::size_t k = 1; k <= n; ++k) g[k - 1] = an * f.coeffs[k] - a0 * f.coeffs[n - k];
    Integer content(0);
    for (const auto& c : g) content = gcd(content, c);
    if (content > 1)
      for (auto& c : g) c /= content;
    f = IntPoly(std::move(g));
  }
  return true;
}

bool all_roots_outside_unit_disk(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.coeffs.front() == 0) return false;  // root at the origin
  return all_roots_inside_unit_disk(reversed(p));
}

std::vector<Rational> power_sums(const RatPoly& monic, std::size_t max_m) {
  if (!monic.is_monic()) throw std::invalid_argument("power_sums needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  // e-coefficients: x^n + a_{n-1} x^{n-1} + ... ; a(i) = coefficient of x^{n-i}
  auto a = [&](std::size_t i) { return monic.coeffs[n - i]; };
  std::vector<Rational> s(max_m + 1);
  s[0] = Rational(static_cast<long>(n));
  for (std::size_t m = 1; m <= max_m; ++m) {
    Rational acc(0);
    for (std::size_t i = 1; i <= std::min(m - 1, n); ++i) acc += a(i) * s[m - i];
    if (m <= n) acc += Rational(static_cast<long>(m)) * a(m);
    s[m] = -acc;
  }
  return s;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace naf
