#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "resdiff/matrix.hpp"
#include "resdiff/rational.hpp"

namespace resdiff {

/// Monomial basis for polynomials in `variables` infinitesimals truncated
/// above total degree `order`, or to a box of per-variable exponent bounds.
class JetSpace {
 public:
  JetSpace(std::size_t variables, int order);
  /// Keeps monomials with exponent v at most bounds[v]; the order is their sum.
  explicit JetSpace(const std::vector<int>& bounds);

  std::size_t variables() const { return variables_; }
  int order() const { return order_; }
  std::size_t size() const { return exponents_.size(); }

  const std::vector<int>& exponents(std::size_t k) const { return exponents_[k]; }
  int degree(std::size_t k) const { return degrees_[k]; }
  /// Throws BadRequest if the monomial is outside the truncation.
  std::size_t index_of(const std::vector<int>& exponents) const;

  struct Product {
    std::uint32_t lhs;
    std::uint32_t rhs;
    std::uint32_t out;
  };
  /// Every (lhs, rhs) pair whose product survives truncation.
  const std::vector<Product>& products() const { return products_; }

 private:
  JetSpace(const std::vector<int>& bounds, int order);

  std::size_t variables_;
  int order_;
  std::vector<std::vector<int>> exponents_;
  std::vector<int> degrees_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<Product> products_;
};

using JetSpacePtr = std::shared_ptr<const JetSpace>;

/// Element of the truncated ring Q[e_1..e_d] / (total degree > order), or of
/// its box quotient.
class Jet {
 public:
  Jet(JetSpacePtr space, const Rational& constant);
  static Jet variable(JetSpacePtr space, std::size_t v);

  const JetSpace& space() const { return *space_; }
  const JetSpacePtr& space_ptr() const { return space_; }
  const Rational& constant() const { return coeffs_[0]; }
  const Rational& coefficient(const std::vector<int>& exponents) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Units are exactly the jets with nonzero constant term.
  bool is_unit() const { return !coeffs_[0].is_zero(); }
  bool is_zero() const;

  Jet inverse() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

 private:
  JetSpacePtr space_;
  std::vector<Rational> coeffs_;
};

/// Determinant over the jet ring. Eliminates with unit pivots while any
/// remain; the leftover block has every entry in the maximal ideal, so it is
/// expanded without division and is zero once larger than the order.
Jet jet_determinant(Matrix<Jet> m);

}  // namespace resdiff
