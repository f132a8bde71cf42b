#include "resdiff/matrix.hpp"

#include "resdiff/errors.hpp"

namespace resdiff {

RationalMatrix make_matrix(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MalformedMatrix("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Integer bareiss_determinant(Matrix<Integer> m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) throw MalformedMatrix("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Integer> ints(n, n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      ints(r, c) = m(r, c).numerator() * (l / m(r, c).denominator());
    }
    scale *= l;
  }
  return Rational(bareiss_determinant(std::move(ints)), scale);
}

}  // namespace resdiff
