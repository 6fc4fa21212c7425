#include "nakai/linear_change.hpp"

#include <utility>

namespace nakai {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

LinearChange::LinearChange(std::vector<std::vector<Rational>> matrix) : m_(std::move(matrix)) {
  for (const auto& row : m_)
    if (row.size() != m_.size()) throw DomainError("linear change matrix is not square");
  if (m_.size() > kMaxVars) throw DomainError("at most 8 variables are supported");
  if (determinant(m_) == 0) throw DomainError("linear change matrix is singular");
}

LinearChange LinearChange::identity(std::size_t n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return LinearChange(std::move(m));
}

LinearChange LinearChange::slice(std::span<const Rational> a) {
  const std::size_t n = a.size();
  if (n == 0 || a[0] == 0) throw DomainError("slice needs a nonzero first coefficient");
  // x_1 = (y_1 - a_2 y_2 - ... - a_n y_n) / a_1, x_i = y_i otherwise.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  m[0][0] = 1 / a[0];
  for (std::size_t j = 1; j < n; ++j) m[0][j] = -a[j] / a[0];
  for (std::size_t i = 1; i < n; ++i) m[i][i] = 1;
  return LinearChange(std::move(m));
}

Polynomial LinearChange::image(std::size_t i) const {
  const std::size_t n = m_.size();
  std::vector<Term> terms;
  for (std::size_t j = 0; j < n; ++j)
    if (m_[i][j] != 0) terms.push_back({ExponentVector::unit(n, j), m_[i][j]});
  return Polynomial::from_terms(n, std::move(terms));
}

Polynomial substitute_linear(const Polynomial& p, const LinearChange& change) {
  const std::size_t n = p.nvars();
  if (change.size() != n) throw ArityError("linear change size does not match polynomial");
  // powers[i][k] = image(i)^k, grown on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(n, 1));
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * change.image(i));
    return powers[i][k];
  };
  Polynomial result(n);
  for (const Term& t : p.terms()) {
    Polynomial term = Polynomial::constant(n, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.exponent[i] > 0) term *= power(i, t.exponent[i]);
    result += term;
  }
  return result;
}

}  // namespace nakai
