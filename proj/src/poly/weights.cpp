#include <algorithm>
#include <numeric>

#include "nakai/errors.hpp"
#include "nakai/polynomial.hpp"

namespace nakai {

bool QuasiHomogeneity::homogeneous() const noexcept {
  return std::all_of(weights.begin(), weights.end(), [](unsigned w) { return w == 1; });
}

std::optional<QuasiHomogeneity> quasi_homogeneous_weights(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) throw DomainError("weights are undefined for constants");
  const std::size_t n = f.nvars();
  if (auto d = homogeneous_degree(f)) return QuasiHomogeneity{std::vector<unsigned>(n, 1), *d};

  // Solve <w, alpha> = 1 over Q for every exponent alpha in the support.
  std::vector<std::vector<Rational>> rows;
  for (const Term& t : f.terms()) {
    std::vector<Rational> row;
    for (std::size_t i = 0; i < n; ++i) row.emplace_back(t.exponent[i]);
    row.emplace_back(1);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    Rational inv = 1 / rows[rank][c];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational factor = rows[r][c];
      for (std::size_t k = c; k <= n; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][n] != 0) return std::nullopt;
  if (rank < n) return std::nullopt;

  std::vector<Rational> w(n);
  for (std::size_t r = 0; r < n; ++r) w[pivots[r]] = rows[r][n];
  Integer den = 1;
  for (const auto& q : w) {
    if (sgn(q) <= 0) return std::nullopt;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  Integer g = 0;
  std::vector<Integer> scaled;
  for (const auto& q : w) {
    Integer v = q.get_num() * (den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  QuasiHomogeneity out;
  Integer degree = den / g;
  for (auto& v : scaled) {
    v /= g;
    if (!v.fits_uint_p()) return std::nullopt;
    out.weights.push_back(unsigned(v.get_ui()));
  }
  if (!degree.fits_uint_p()) return std::nullopt;
  out.degree = unsigned(degree.get_ui());
  return out;
}

}  // namespace nakai
