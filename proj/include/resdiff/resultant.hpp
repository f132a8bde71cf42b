#pragma once

#include <cstddef>

#include "resdiff/matrix.hpp"
#include "resdiff/polynomial.hpp"

namespace resdiff {

/// Sylvester matrix of f (degree n) and g (degree m), of size m+n.
/// Rows [0, m) hold shifted copies of f's coefficients; rows [m, m+n) hold
/// shifted copies of g's. Every a_i appears in exactly m rows and every b_j
/// in exactly n rows, and each entry is linear in one coefficient.
struct SylvesterMatrix {
  RationalMatrix entries;
  int n = 0;  // deg f
  int m = 0;  // deg g

  std::size_t size() const { return entries.rows(); }
  std::size_t first_g_row() const { return static_cast<std::size_t>(m); }
};

/// Throws MalformedPolynomial for a zero input and DegenerateInput when both
/// polynomials are constant.
SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g);

/// R(f, g) = a0^m b0^n prod (alpha_i - beta_j), via the Sylvester determinant.
/// For constant g this is b0^n; for constant f it is a0^m.
Rational resultant(const Polynomial& f, const Polynomial& g);

/// a0^m * prod g(z_i) over the roots of f counted with multiplicity.
Rational resultant_from_roots(const RootSpec& spec_f, const Polynomial& g);

/// D(f) = (-1)^(n(n-1)/2) R(f, f') / a0. Throws DegenerateInput for degree < 2.
Rational discriminant(const Polynomial& f);

}  // namespace resdiff
