#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "resdiff/rational.hpp"

namespace resdiff {

/// Dense univariate polynomial in descending powers: coefficient i multiplies
/// z^(n-i), so index 0 is the leading coefficient. The zero polynomial is the
/// empty list and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;

  /// Throws MalformedPolynomial if the list is nonempty and starts with zero.
  explicit Polynomial(std::vector<Rational> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const Rational& leading() const { return coeffs_.front(); }
  const Rational& constant_term() const { return coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

struct RootEntry {
  Rational value;
  int multiplicity = 1;

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

/// A polynomial given by its leading coefficient and roots with multiplicity.
struct RootSpec {
  Rational leading{1};
  std::vector<RootEntry> roots;

  /// Sum of multiplicities.
  int degree() const;
  /// Roots expanded by multiplicity, in listed order.
  std::vector<Rational> root_list() const;
  /// Throws BadRequest on zero leading coefficient or nonpositive multiplicity.
  void validate() const;

  friend bool operator==(const RootSpec&, const RootSpec&) = default;
};

Polynomial poly_from_coeffs(std::vector<Rational> coefficients);

/// Expands leading * prod (z - r)^m.
Polynomial poly_from_roots(const RootSpec& spec);

Rational evaluate(const Polynomial& f, const Rational& x);

/// k-fold formal derivative; the zero polynomial when k exceeds the degree.
Polynomial derivative(const Polynomial& f, int k = 1);

/// h(y) = f(y - c). Roots move by +c.
Polynomial shift(const Polynomial& f, const Rational& c);

/// The shift that removes the z^(n-1) term: a_1 / (n a_0).
Rational depressing_shift(const Polynomial& f);

/// f = z^k * g with g(0) != 0. Throws MalformedPolynomial for the zero polynomial.
std::pair<int, Polynomial> trailing_zero_split(const Polynomial& f);

/// Synthetic division by (z - r): returns quotient and remainder f(r).
std::pair<Polynomial, Rational> divide_linear(const Polynomial& f, const Rational& r);

Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Rational& c, const Polynomial& f);

}  // namespace resdiff
