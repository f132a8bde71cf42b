#include "resdiff/calculus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "resdiff/errors.hpp"
#include "resdiff/jet.hpp"
#include "resdiff/resultant.hpp"

namespace resdiff {

namespace {

struct RowLayout {
  std::size_t first_row;  // first Sylvester row carrying the side
  std::size_t row_count;
  int degree;             // coefficients are 0..degree
};

RowLayout layout_for(const SylvesterMatrix& s, Side side) {
  if (side == Side::A) return {0, static_cast<std::size_t>(s.m), s.n};
  return {s.first_g_row(), static_cast<std::size_t>(s.n), s.m};
}

Integer common_denominator(const Polynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

void check_request(const RowLayout& layout, const DerivativeRequest& req) {
  if (req.indices.empty()) throw BadRequest("derivative order must be at least 1");
  for (int j : req.indices) {
    if (j < 0 || j > layout.degree) {
      throw BadRequest("coefficient index " + std::to_string(j) + " out of range 0.." +
                       std::to_string(layout.degree));
    }
  }
}

}  // namespace

Rational partial(const Polynomial& f, const Polynomial& g, const DerivativeRequest& req) {
  const SylvesterMatrix s = sylvester_matrix(f, g);
  const RowLayout layout = layout_for(s, req.side);
  check_request(layout, req);
  if (static_cast<std::size_t>(req.order()) > layout.row_count) return Rational(0);

  // one infinitesimal per distinct index
  std::map<int, int> counts;
  for (int j : req.indices) ++counts[j];
  std::map<int, std::size_t> variable_of;
  for (const auto& [j, c] : counts) variable_of.emplace(j, variable_of.size());

  // only the coefficient of the target monomial is needed, so truncate to its box
  std::vector<int> bounds;
  for (const auto& [j, c] : counts) bounds.push_back(c);
  auto space = std::make_shared<const JetSpace>(bounds);
  const std::size_t size = s.size();
  // integer rows keep the fraction-free elimination integral
  const Integer lf = common_denominator(f);
  const Integer lg = common_denominator(g);
  Matrix<Jet> m(size, size, Jet(space, Rational(0)));
  for (std::size_t r = 0; r < size; ++r) {
    const Rational row_scale(r < s.first_g_row() ? lf : lg);
    for (std::size_t c = 0; c < size; ++c) m(r, c) = Jet(space, s.entries(r, c) * row_scale);
  }
  const Rational side_scale(req.side == Side::A ? lf : lg);
  for (std::size_t k = 0; k < layout.row_count; ++k) {
    const std::size_t row = layout.first_row + k;
    for (const auto& [j, v] : variable_of) {
      Jet x = Jet::variable(space, v);
      x *= Jet(space, side_scale);
      m(row, k + static_cast<std::size_t>(j)) += x;
    }
  }

  const Jet det = jet_determinant(std::move(m));
  std::vector<int> exponents;
  Rational scale = Rational(1) / (pow(Rational(lf), s.m) * pow(Rational(lg), s.n));
  for (const auto& [j, c] : counts) {
    exponents.push_back(c);
    scale *= factorial(static_cast<unsigned>(c));
  }
  return det.coefficient(exponents) * scale;
}

Rational partial_rowsum(const Polynomial& f, const Polynomial& g, const DerivativeRequest& req) {
  const SylvesterMatrix s = sylvester_matrix(f, g);
  const RowLayout layout = layout_for(s, req.side);
  check_request(layout, req);
  const auto order = static_cast<std::size_t>(req.order());
  if (order > layout.row_count) return Rational(0);

  Rational total;
  std::vector<std::size_t> chosen;  // chosen[k] = row offset for the k-th index
  std::vector<bool> used(layout.row_count, false);
  const std::size_t size = s.size();

  std::function<void()> visit = [&]() {
    if (chosen.size() == order) {
      RationalMatrix m = s.entries;
      for (std::size_t k = 0; k < order; ++k) {
        const std::size_t row = layout.first_row + chosen[k];
        for (std::size_t c = 0; c < size; ++c) m(row, c) = Rational(0);
        // d(row)/d(coef j) is the unit vector at the column holding coef j
        m(row, chosen[k] + static_cast<std::size_t>(req.indices[k])) = Rational(1);
      }
      total += determinant(m);
      return;
    }
    for (std::size_t r = 0; r < layout.row_count; ++r) {
      if (used[r]) continue;
      used[r] = true;
      chosen.push_back(r);
      visit();
      chosen.pop_back();
      used[r] = false;
    }
  };
  visit();
  return total;
}

std::vector<Rational> gradient(const Polynomial& f, const Polynomial& g, Side side) {
  const int degree = side == Side::A ? f.degree() : g.degree();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(degree + 1, 0)));
  for (int j = 0; j <= degree; ++j) out.push_back(partial(f, g, {side, {j}}));
  return out;
}

namespace {

// Shared body of the two closed forms. `other` is evaluated at every root of
// `spec` except the first entry.
Rational closed_form(const RootSpec& spec, const Polynomial& other, const std::vector<int>& indices,
                     int power_degree) {
  spec.validate();
  if (spec.roots.empty()) throw BadRequest("root spec has no roots");
  if (other.is_zero()) throw MalformedPolynomial("zero polynomial");
  const Rational& w = spec.roots.front().value;
  const int s = spec.roots.front().multiplicity;
  if (static_cast<int>(indices.size()) != s) {
    throw BadRequest("closed form needs order equal to the multiplicity " + std::to_string(s));
  }
  if (!evaluate(other, w).is_zero()) throw BadRequest("shared root is not a root of the other polynomial");
  long index_sum = 0;
  for (int j : indices) {
    if (j < 0 || j > other.degree()) throw BadRequest("coefficient index out of range");
    index_sum += j;
  }
  Rational value = pow(spec.leading, other.degree()) * factorial(static_cast<unsigned>(s)) *
                   pow(w, static_cast<long>(s) * power_degree - index_sum);
  for (std::size_t i = 1; i < spec.roots.size(); ++i) {
    value *= pow(evaluate(other, spec.roots[i].value), spec.roots[i].multiplicity);
  }
  return value;
}

}  // namespace

Rational closed_form_partial_b(const RootSpec& spec_f, const Polynomial& g,
                               const std::vector<int>& indices) {
  return closed_form(spec_f, g, indices, g.degree());
}

Rational closed_form_partial_a(const RootSpec& spec_g, const Polynomial& f,
                               const std::vector<int>& indices) {
  const long n = f.degree();
  const long m = spec_g.degree();
  const Rational value = closed_form(spec_g, f, indices, f.degree());
  return (m * n) % 2 == 0 ? value : -value;
}

}  // namespace resdiff
