#pragma once

// Exact geometry of integer lattices under a positive-definite rational
// quadratic form q(x) = x^T G x: ellipsoid enumeration (Fincke-Pohst),
// shortest vectors and covering-radius bounds.

#include "naf/arith.hpp"

#include <cstddef>
#include <vector>

namespace naf {

Rational quadratic_value(const RatMatrix& g, const IntVector& x);
bool is_positive_definite(const RatMatrix& g);

/// All integer x with q(x) <= bound, sorted lexicographically. Throws
/// SizeCapExceeded once more than `cap` points are found.
std::vector<IntVector> enumerate_ellipsoid(const RatMatrix& g, const Rational& bound, std::size_t cap);

/// Minimum of q over nonzero integer vectors.
Rational shortest_vector_sq(const RatMatrix& g);

/// LLL-reduced basis (columns, integer coordinates) for the form, delta = 3/4.
IntMatrix lll_basis(const RatMatrix& g);

/// Squared covering radius of Z^n under q. Exact for n <= 2 (circumradius of
/// an obtuse-free reduced triangle); for larger n the nearest-plane bound
/// (1/4) sum |b*_i|^2 over an LLL basis, which is an upper bound.
Rational covering_radius_sq_upper(const RatMatrix& g);

}  // namespace naf
