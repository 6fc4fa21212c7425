#include "nakai/symdet.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace nakai {

PolyMatrix::PolyMatrix(std::size_t size, std::size_t nvars)
    : rows_(size, std::vector<Polynomial>(size, Polynomial(nvars))), nvars_(nvars) {}

PolyMatrix::PolyMatrix(std::vector<std::vector<Polynomial>> rows) : rows_(std::move(rows)), nvars_(0) {
  if (!rows_.empty()) nvars_ = rows_[0].empty() ? 0 : rows_[0][0].nvars();
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) throw DomainError("polynomial matrix is not square");
    for (const Polynomial& p : row)
      if (p.nvars() != nvars_) throw ArityError("matrix entries have different variable counts");
  }
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (p.nvars() != nvars_) throw ArityError("matrix entry has the wrong variable count");
  rows_.at(r).at(c) = std::move(p);
}

bool PolyMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = r + 1; c < size(); ++c)
      if (rows_[r][c] != rows_[c][r]) return false;
  return true;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  if (rows.size() != cols.size()) throw DomainError("submatrix must be square");
  PolyMatrix out(rows.size(), nvars_);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) out.rows_[a][b] = rows_.at(rows[a]).at(cols[b]);
  return out;
}

PolyMatrix hessian(const Polynomial& f) {
  const std::size_t n = f.nvars();
  PolyMatrix h(n, n);
  std::vector<Polynomial> first;
  for (std::size_t i = 0; i < n; ++i) first.push_back(partial(f, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Polynomial fij = partial(first[i], j);
      h.set(j, i, fij);
      h.set(i, j, std::move(fij));
    }
  return h;
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> gens) {
  const std::size_t n = gens.size();
  PolyMatrix jac(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gens[i].nvars() != n) throw ArityError("jacobian needs n polynomials in n variables");
    for (std::size_t j = 0; j < n; ++j) jac.set(i, j, partial(gens[i], j));
  }
  return jac;
}

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxDeterminantSize)
    throw DomainError("determinant limited to " + std::to_string(kMaxDeterminantSize) + "x" +
                      std::to_string(kMaxDeterminantSize) + " matrices");
  if (n == 0) return Polynomial::constant(m.nvars(), 1);
  // memo[S] = determinant of the bottom |S| rows restricted to column set S.
  std::vector<Polynomial> memo(std::size_t{1} << n, Polynomial(m.nvars()));
  memo[0] = Polynomial::constant(m.nvars(), 1);
  std::vector<unsigned> masks;
  for (unsigned s = 1; s < (1u << n); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  for (unsigned s : masks) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(s));
    Polynomial acc(m.nvars());
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(s & (1u << c))) continue;
      const Polynomial& entry = m(row, c);
      const Polynomial& rest = memo[s & ~(1u << c)];
      if (!entry.is_zero() && !rest.is_zero()) {
        if (position % 2 == 0)
          acc += entry * rest;
        else
          acc -= entry * rest;
      }
      ++position;
    }
    memo[s] = std::move(acc);
  }
  return memo[(1u << n) - 1];
}

unsigned inversion_number(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t v : perm) {
    if (v >= perm.size() || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
  unsigned count = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++count;
  return count;
}

namespace {

std::vector<std::size_t> complete(const std::vector<std::size_t>& deleted, std::size_t n, const char* what) {
  std::vector<bool> used(n, false);
  for (std::size_t v : deleted) {
    if (v >= n) throw DomainError(std::string("minor ") + what + " index out of range");
    if (used[v]) throw DomainError(std::string("repeated ") + what + " index in minor");
    used[v] = true;
  }
  std::vector<std::size_t> perm = deleted;
  for (std::size_t v = 0; v < n; ++v)
    if (!used[v]) perm.push_back(v);
  return perm;
}

}  // namespace

Polynomial signed_minor_with_completion(const PolyMatrix& m, std::span<const std::size_t> row_perm,
                                        std::span<const std::size_t> col_perm, std::size_t k) {
  if (row_perm.size() != m.size() || col_perm.size() != m.size() || k > m.size())
    throw DomainError("permutation length does not match matrix");
  unsigned sign = inversion_number(row_perm) + inversion_number(col_perm);
  Polynomial minor = determinant(m.submatrix(row_perm.subspan(k), col_perm.subspan(k)));
  return sign % 2 == 0 ? minor : -minor;
}

Polynomial signed_minor(const PolyMatrix& m, const MinorSpec& spec) {
  if (spec.rows.size() != spec.cols.size()) throw DomainError("minor deletes unequal numbers of rows and columns");
  auto rows = complete(spec.rows, m.size(), "row");
  auto cols = complete(spec.cols, m.size(), "column");
  return signed_minor_with_completion(m, rows, cols, spec.rows.size());
}

Polynomial cofactor(const PolyMatrix& m, std::size_t r, std::size_t c) {
  if (r >= m.size() || c >= m.size()) throw DomainError("cofactor index out of range");
  std::vector<std::size_t> rows, cols;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (v != r) rows.push_back(v);
    if (v != c) cols.push_back(v);
  }
  Polynomial minor = determinant(m.submatrix(rows, cols));
  return (r + c) % 2 == 0 ? minor : -minor;
}

namespace {

unsigned require_homogeneous(const Polynomial& f) {
  auto d = f.is_zero() ? std::nullopt : homogeneous_degree(f);
  if (!d) throw DomainError("cofactor identity needs a nonzero homogeneous polynomial");
  if (*d < 2) throw DomainError("cofactor identity needs degree >= 2");
  return *d;
}

void require_index(std::size_t v, std::size_t n) {
  if (v >= n) throw DomainError("identity index out of range");
}

}  // namespace

IdentityReport verify_cofactor_identity(const Polynomial& f, std::size_t i, std::size_t j, std::size_t k) {
  const unsigned d = require_homogeneous(f);
  const std::size_t n = f.nvars();
  require_index(i, n);
  require_index(j, n);
  require_index(k, n);
  PolyMatrix h = hessian(f);
  IdentityReport report{Polynomial(n), Polynomial(n), Polynomial(n), false};
  report.lhs = Polynomial::variable(n, i) * cofactor(h, j, k) - Polynomial::variable(n, k) * cofactor(h, j, i);
  if (i != k) {
    Polynomial sum(n);
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      sum += partial(f, l) * signed_minor(h, MinorSpec{{l, j}, {i, k}});
    }
    report.rhs = Rational(d - 1) * sum;
  }
  report.residual = report.lhs - report.rhs;
  report.holds = report.residual.is_zero();
  return report;
}

IdentityReport verify_column_claim(const Polynomial& f, std::size_t i, std::size_t j, std::size_t k,
                                   std::size_t t) {
  const std::size_t n = f.nvars();
  for (std::size_t v : {i, j, k, t}) require_index(v, n);
  if (i == k) throw DomainError("column claim needs i != k");
  if (t == i || t == k) throw DomainError("column claim needs t not in {i, k}");
  PolyMatrix h = hessian(f);
  Polynomial sum(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (l == j) continue;
    sum += h(l, t) * signed_minor(h, MinorSpec{{l, j}, {i, k}});
  }
  IdentityReport report{Polynomial(n), Polynomial(n), sum, sum.is_zero()};
  report.lhs = sum;
  return report;
}

}  // namespace nakai
