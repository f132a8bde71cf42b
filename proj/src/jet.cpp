#include "resdiff/jet.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "resdiff/errors.hpp"

namespace resdiff {

namespace {

void enumerate(std::vector<int>& current, std::size_t var, int remaining, const std::vector<int>& bounds,
               std::vector<std::vector<int>>& out) {
  if (var == current.size()) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= std::min(remaining, bounds[var]); ++e) {
    current[var] = e;
    enumerate(current, var + 1, remaining - e, bounds, out);
  }
  current[var] = 0;
}

int checked_sum(const std::vector<int>& bounds) {
  int total = 0;
  for (int b : bounds) {
    if (b < 0) throw BadRequest("negative jet exponent bound");
    total += b;
  }
  return total;
}

}  // namespace

JetSpace::JetSpace(std::size_t variables, int order)
    : JetSpace(std::vector<int>(variables, std::max(order, 0)), order) {}

JetSpace::JetSpace(const std::vector<int>& bounds) : JetSpace(bounds, checked_sum(bounds)) {}

JetSpace::JetSpace(const std::vector<int>& bounds, int order) : variables_(bounds.size()), order_(order) {
  if (order < 0) throw BadRequest("negative jet order");
  std::vector<std::vector<int>> all;
  std::vector<int> current(variables_, 0);
  enumerate(current, 0, order, bounds, all);
  // graded order, constant first
  for (int d = 0; d <= order; ++d) {
    for (auto& e : all) {
      int deg = 0;
      for (int x : e) deg += x;
      if (deg != d) continue;
      index_.emplace(e, exponents_.size());
      exponents_.push_back(e);
      degrees_.push_back(d);
    }
  }
  std::vector<int> sum(variables_);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
      if (degrees_[i] + degrees_[j] > order_) continue;
      bool inside = true;
      for (std::size_t v = 0; v < variables_; ++v) {
        sum[v] = exponents_[i][v] + exponents_[j][v];
        inside = inside && sum[v] <= bounds[v];
      }
      if (!inside) continue;
      products_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(index_.at(sum))});
    }
  }
}

std::size_t JetSpace::index_of(const std::vector<int>& exponents) const {
  auto it = index_.find(exponents);
  if (it == index_.end()) throw BadRequest("monomial outside jet truncation");
  return it->second;
}

Jet::Jet(JetSpacePtr space, const Rational& constant)
    : space_(std::move(space)), coeffs_(space_->size()) {
  coeffs_[0] = constant;
}

Jet Jet::variable(JetSpacePtr space, std::size_t v) {
  Jet j(space, Rational(0));
  if (space->order() >= 1) {
    std::vector<int> e(space->variables(), 0);
    e.at(v) = 1;
    j.coeffs_[space->index_of(e)] = Rational(1);
  }
  return j;
}

const Rational& Jet::coefficient(const std::vector<int>& exponents) const {
  return coeffs_[space_->index_of(exponents)];
}

bool Jet::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet out(a.space_, Rational(0));
  for (const auto& p : a.space_->products()) {
    const Rational& x = a.coeffs_[p.lhs];
    if (x.is_zero()) continue;
    const Rational& y = b.coeffs_[p.rhs];
    if (y.is_zero()) continue;
    out.coeffs_[p.out] += x * y;
  }
  return out;
}

Jet Jet::inverse() const {
  if (!is_unit()) throw std::domain_error("jet without constant term is not invertible");
  // (c + n)^-1 = c^-1 * sum_t (-n/c)^t, and n^(order+1) = 0
  const Rational c_inv = Rational(1) / constant();
  Jet x = *this;
  x.coeffs_[0] = Rational(0);
  for (auto& c : x.coeffs_) c *= -c_inv;
  Jet sum(space_, Rational(1));
  Jet power(space_, Rational(1));
  for (int t = 1; t <= space_->order(); ++t) {
    power = power * x;
    sum += power;
  }
  for (auto& c : sum.coeffs_) c *= c_inv;
  return sum;
}

namespace {

// Division-free expansion along rows over column subsets; fine for the small
// blocks left after unit pivoting (size <= jet order).
Jet subset_determinant(const Matrix<Jet>& m, std::size_t offset, const JetSpacePtr& space) {
  const std::size_t k = m.rows() - offset;
  const std::size_t full = std::size_t{1} << k;
  std::vector<Jet> dp(full, Jet(space, Rational(0)));
  dp[0] = Jet(space, Rational(1));
  for (std::size_t mask = 1; mask < full; ++mask) {
    const auto row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Jet acc(space, Rational(0));
    for (std::size_t c = 0; c < k; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const Jet& entry = m(offset + row, offset + c);
      if (entry.is_zero()) continue;
      const Jet term = entry * dp[mask ^ (std::size_t{1} << c)];
      // sign is the parity of chosen columns to the right of c
      const int greater = std::popcount(mask >> (c + 1));
      if (greater % 2 == 0) acc += term; else acc -= term;
    }
    dp[mask] = std::move(acc);
  }
  return dp[full - 1];
}

}  // namespace

Jet jet_determinant(Matrix<Jet> m) {
  if (!m.square()) throw MalformedMatrix("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw MalformedMatrix("empty jet matrix");
  const JetSpacePtr space = m(0, 0).space_ptr();

  // Bareiss steps on unit pivots: after step k each trailing entry is a
  // (k+1)-minor, so integer inputs stay integral.
  bool negate = false;
  Jet previous(space, Rational(1));
  Jet previous_inv(space, Rational(1));
  bool first = true;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t pr = n;
    std::size_t pc = n;
    for (std::size_t c = k; c < n && pr == n; ++c) {
      for (std::size_t r = k; r < n; ++r) {
        if (m(r, c).is_unit()) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == n) break;
    if (pr != k) {
      m.swap_rows(pr, k);
      negate = !negate;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(m(r, pc), m(r, k));
      negate = !negate;
    }
    const Jet pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Jet lead = m(i, k);
      const bool lead_zero = lead.is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        Jet v = pivot * m(i, j);
        if (!lead_zero && !m(k, j).is_zero()) v -= lead * m(k, j);
        m(i, j) = first ? std::move(v) : v * previous_inv;
      }
    }
    previous = pivot;
    previous_inv = pivot.inverse();
    first = false;
  }
  const std::size_t rest = n - k;
  Jet det = previous;
  if (rest > 0) {
    if (static_cast<int>(rest) > space->order()) return Jet(space, Rational(0));
    // Sylvester identity: det = det(trailing block) / previous^(rest - 1)
    det = subset_determinant(m, k, space);
    for (std::size_t t = 1; t < rest; ++t) det *= previous_inv;
  }
  if (negate) return Jet(space, Rational(0)) - det;
  return det;
}

}  // namespace resdiff
