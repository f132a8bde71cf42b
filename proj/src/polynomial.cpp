#include "resdiff/polynomial.hpp"

#include <algorithm>

#include "resdiff/errors.hpp"

namespace resdiff {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (!coeffs_.empty() && coeffs_.front().is_zero()) {
    throw MalformedPolynomial("leading coefficient is zero");
  }
}

int RootSpec::degree() const {
  int d = 0;
  for (const auto& r : roots) d += r.multiplicity;
  return d;
}

std::vector<Rational> RootSpec::root_list() const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

void RootSpec::validate() const {
  if (leading.is_zero()) throw BadRequest("root spec leading coefficient is zero");
  for (const auto& r : roots) {
    if (r.multiplicity < 1) throw BadRequest("root multiplicity must be at least 1");
  }
}

Polynomial poly_from_coeffs(std::vector<Rational> coefficients) {
  return Polynomial(std::move(coefficients));
}

Polynomial poly_from_roots(const RootSpec& spec) {
  spec.validate();
  std::vector<Rational> c{spec.leading};
  for (const auto& root : spec.root_list()) {
    // multiply by (z - root) in place
    c.push_back(Rational(0));
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= root * c[i - 1];
  }
  return Polynomial(std::move(c));
}

Rational evaluate(const Polynomial& f, const Rational& x) {
  Rational acc;
  for (const auto& a : f.coefficients()) {
    acc *= x;
    acc += a;
  }
  return acc;
}

Polynomial derivative(const Polynomial& f, int k) {
  const int n = f.degree();
  if (k <= 0) return f;
  if (k > n) return Polynomial();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n - k + 1));
  for (int i = 0; i <= n - k; ++i) {
    // z^(n-i) -> (n-i)(n-i-1)...(n-i-k+1) z^(n-i-k)
    Integer falling = 1;
    for (int t = 0; t < k; ++t) falling *= (n - i - t);
    out.push_back(f[static_cast<std::size_t>(i)] * Rational(falling));
  }
  return Polynomial(std::move(out));
}

Polynomial shift(const Polynomial& f, const Rational& c) {
  if (f.is_zero() || c.is_zero()) return f;
  // Horner in the shifted variable: h = (...(a0 (y - c) + a1)(y - c) + ...)
  const Rational minus_c = -c;
  std::vector<Rational> h;
  for (const auto& a : f.coefficients()) {
    h.push_back(Rational(0));
    for (std::size_t i = h.size() - 1; i > 0; --i) h[i] += minus_c * h[i - 1];
    h.back() += a;
  }
  return Polynomial(std::move(h));
}

Rational depressing_shift(const Polynomial& f) {
  if (f.degree() < 1) throw DegenerateInput("depressing shift needs degree >= 1");
  return f[1] / (Rational(f.degree()) * f.leading());
}

std::pair<int, Polynomial> trailing_zero_split(const Polynomial& f) {
  if (f.is_zero()) throw MalformedPolynomial("zero polynomial has no trailing-zero split");
  const auto& c = f.coefficients();
  std::size_t keep = c.size();
  while (c[keep - 1].is_zero()) --keep;
  return {static_cast<int>(c.size() - keep), Polynomial({c.begin(), c.begin() + static_cast<std::ptrdiff_t>(keep)})};
}

std::pair<Polynomial, Rational> divide_linear(const Polynomial& f, const Rational& r) {
  if (f.is_zero()) return {Polynomial(), Rational(0)};
  std::vector<Rational> q;
  Rational acc;
  for (const auto& a : f.coefficients()) {
    acc = acc * r + a;
    q.push_back(acc);
  }
  Rational remainder = q.back();
  q.pop_back();
  return {Polynomial(std::move(q)), remainder};
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial();
  std::vector<Rational> out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  if (c.is_zero() || f.is_zero()) return Polynomial();
  std::vector<Rational> out = f.coefficients();
  for (auto& a : out) a *= c;
  return Polynomial(std::move(out));
}

}  // namespace resdiff
