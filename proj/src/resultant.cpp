#include "resdiff/resultant.hpp"

#include "resdiff/errors.hpp"

namespace resdiff {

SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw MalformedPolynomial("resultant of the zero polynomial");
  const int n = f.degree();
  const int m = g.degree();
  if (n == 0 && m == 0) throw DegenerateInput("resultant of two constants");
  const auto size = static_cast<std::size_t>(n + m);
  SylvesterMatrix s{RationalMatrix(size, size), n, m};
  for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
    for (std::size_t i = 0; i < f.size(); ++i) s.entries(r, r + i) = f[i];
  }
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
    for (std::size_t j = 0; j < g.size(); ++j) s.entries(s.first_g_row() + r, r + j) = g[j];
  }
  return s;
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
  return determinant(sylvester_matrix(f, g).entries);
}

Rational resultant_from_roots(const RootSpec& spec_f, const Polynomial& g) {
  spec_f.validate();
  if (g.is_zero()) throw MalformedPolynomial("resultant of the zero polynomial");
  Rational r = pow(spec_f.leading, g.degree());
  for (const auto& root : spec_f.roots) r *= pow(evaluate(g, root.value), root.multiplicity);
  return r;
}

Rational discriminant(const Polynomial& f) {
  if (f.is_zero() || f.degree() < 2) throw DegenerateInput("discriminant needs degree >= 2");
  const long n = f.degree();
  const Rational r = resultant(f, derivative(f)) / f.leading();
  return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

}  // namespace resdiff
