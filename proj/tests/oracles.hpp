#pragma once

// Independent reference computations used only by tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "nakai/polynomial.hpp"
#include "nakai/symdet.hpp"

namespace nakai::oracle {

/// Leibniz formula: sum over all permutations, sign from a brute-force
/// inversion count.
inline Polynomial leibniz_determinant(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(nvars);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    Polynomial term = Polynomial::constant(nvars, inversions % 2 ? -1 : 1);
    for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// All monomials of total degree d in n variables.
inline std::vector<ExponentVector> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(ExponentVector(std::span<const unsigned>(e)));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = left - k;
      self(self, i + 1, k);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

/// Gaussian elimination over Q: solves A x = b, returns nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c] == 0) continue;
      Rational factor = a[q][c] / a[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[q][cc] -= factor * a[r][cc];
      b[q] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q)
    if (b[q] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t q = 0; q < r; ++q) x[pivot_col[q]] = b[q] / a[q][pivot_col[q]];
  return x;
}

/// Degreewise linear-algebra membership for homogeneous data: p in (gens) iff
/// p = sum q_i g_i with q_i homogeneous of degree deg p - deg g_i, solved as
/// one linear system over the monomials of degree deg p.
inline std::optional<std::vector<Polynomial>> homogeneous_membership(const Polynomial& p,
                                                                    const std::vector<Polynomial>& gens) {
  const std::size_t n = p.nvars();
  std::vector<Polynomial> zero(gens.size(), Polynomial(n));
  if (p.is_zero()) return zero;
  if (!homogeneous_degree(p)) {
    // Homogeneous generators: p is a member iff each graded piece is.
    std::vector<std::vector<Term>> pieces;
    for (const Term& t : p.terms()) {
      if (pieces.size() <= t.exponent.degree()) pieces.resize(t.exponent.degree() + 1);
      pieces[t.exponent.degree()].push_back(t);
    }
    std::vector<Polynomial> q = zero;
    for (auto& piece : pieces) {
      if (piece.empty()) continue;
      auto part = homogeneous_membership(Polynomial::from_terms(n, std::move(piece)), gens);
      if (!part) return std::nullopt;
      for (std::size_t i = 0; i < q.size(); ++i) q[i] += (*part)[i];
    }
    return q;
  }
  const unsigned d = *homogeneous_degree(p);
  auto target = monomials_of_degree(n, d);
  std::vector<std::pair<std::size_t, ExponentVector>> unknowns;
  std::vector<Polynomial> columns;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    unsigned dg = *homogeneous_degree(gens[i]);
    if (dg > d) continue;
    for (const ExponentVector& m : monomials_of_degree(n, d - dg)) {
      unknowns.emplace_back(i, m);
      columns.push_back(gens[i].times_term(m, 1));
    }
  }
  std::vector<std::vector<Rational>> a(target.size(), std::vector<Rational>(unknowns.size(), 0));
  std::vector<Rational> b(target.size());
  for (std::size_t r = 0; r < target.size(); ++r) {
    b[r] = p.coefficient(target[r]);
    for (std::size_t c = 0; c < columns.size(); ++c) a[r][c] = columns[c].coefficient(target[r]);
  }
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  std::vector<Polynomial> q = zero;
  for (std::size_t c = 0; c < unknowns.size(); ++c)
    q[unknowns[c].first] += Polynomial::monomial(unknowns[c].second, (*x)[c]);
  return q;
}

/// Standard monomials of a monomial ideal given by pure powers x_i^{m_i},
/// counted by enumerating the box.
inline std::size_t box_monomial_count(const std::vector<unsigned>& pure_powers) {
  std::size_t count = 1;
  for (unsigned m : pure_powers) count *= m;
  return count;
}

}  // namespace nakai::oracle
