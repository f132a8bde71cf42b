#pragma once

#include <vector>

#include "resdiff/polynomial.hpp"
#include "resdiff/rational.hpp"

namespace resdiff {

/// Which polynomial's coefficients the resultant is differentiated by:
/// A for a_0..a_n (the first argument f), B for b_0..b_m (the second, g).
enum class Side { A, B };

/// A mixed partial derivative of R(f, g). Indices form a multiset; their
/// order is irrelevant because mixed partials commute.
struct DerivativeRequest {
  Side side = Side::B;
  std::vector<int> indices;

  int order() const { return static_cast<int>(indices.size()); }
};

/// Exact mixed partial of R(f, g) as a polynomial in the coefficients.
///
/// Every differentiated coefficient c_j gets its own infinitesimal e_j, the
/// Sylvester determinant is evaluated once over the ring truncated above
/// total degree s, and the coefficient of prod e_j^(c_j) is scaled by
/// prod c_j!. Requests of order above the number of Sylvester rows carrying
/// that side are legitimately zero.
///
/// Throws BadRequest for an empty request or an out-of-range index.
Rational partial(const Polynomial& f, const Polynomial& g, const DerivativeRequest& req);

/// Same value as partial(), computed from multilinearity of the determinant
/// in its rows: the sum over ordered tuples of distinct rows (r_1..r_s) of
/// the determinant with row r_k replaced by its derivative with respect to
/// the k-th requested coefficient.
Rational partial_rowsum(const Polynomial& f, const Polynomial& g, const DerivativeRequest& req);

/// All first partials on one side, indexed by coefficient.
std::vector<Rational> gradient(const Polynomial& f, const Polynomial& g, Side side);

/// Closed form for an order-s partial on side B when w, the first root of
/// spec_f with multiplicity s, is also a root of g:
///   a_0^m s! w^(sm - sum j) prod_{other roots z of f} g(z).
/// Throws BadRequest unless the order equals s and g(w) = 0.
Rational closed_form_partial_b(const RootSpec& spec_f, const Polynomial& g,
                               const std::vector<int>& indices);

/// Mirror of closed_form_partial_b for side A, with w the first root of
/// spec_g of multiplicity p:
///   (-1)^(mn) b_0^n p! w^(pn - sum i) prod_{other roots y of g} f(y).
Rational closed_form_partial_a(const RootSpec& spec_g, const Polynomial& f,
                               const std::vector<int>& indices);

}  // namespace resdiff
