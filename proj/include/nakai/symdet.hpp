#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nakai/polynomial.hpp"

namespace nakai {

/// Largest matrix handled by `determinant` (cofactor expansion memoized over
/// column subsets).
inline constexpr std::size_t kMaxDeterminantSize = 6;

/// Square matrix of polynomials sharing one variable count.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t size, std::size_t nvars);
  explicit PolyMatrix(std::vector<std::vector<Polynomial>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t nvars() const noexcept { return nvars_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  void set(std::size_t r, std::size_t c, Polynomial p);
  bool is_symmetric() const;

  /// Rows and columns taken in the given order.
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::vector<std::vector<Polynomial>> rows_;
  std::size_t nvars_;
};

/// (d^2 f / dx_i dx_j), plain second partials.
PolyMatrix hessian(const Polynomial& f);

/// (d g_i / dx_j) for n polynomials in n variables.
PolyMatrix jacobian_matrix(std::span<const Polynomial> gens);

/// Exact determinant; the empty matrix has determinant 1. Throws DomainError
/// above kMaxDeterminantSize.
Polynomial determinant(const PolyMatrix& m);

/// Number of inverted pairs of a permutation of {0, ..., n-1}.
/// Throws DomainError when `perm` is not a permutation.
unsigned inversion_number(std::span<const std::size_t> perm);

/// Deleted rows (i_1..i_k) and deleted columns (j_1..j_k), 0-based.
struct MinorSpec {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Signed generalized complementary minor
///
///   A_{i1 j1 ... ik jk} = (-1)^{tau(I) + tau(J)} det M[I_rest, J_rest]
///
/// where I and J complete the deleted lists to permutations by appending the
/// remaining indices in increasing order. For k = 1 this is the classical
/// cofactor (-1)^{i+j} M_ij; for k = 0 it is det M.
Polynomial signed_minor(const PolyMatrix& m, const MinorSpec& spec);

/// Same quantity from explicit full permutations; the first `k` entries of
/// each are the deleted indices and the remainder fixes the submatrix order.
Polynomial signed_minor_with_completion(const PolyMatrix& m, std::span<const std::size_t> row_perm,
                                        std::span<const std::size_t> col_perm, std::size_t k);

/// (-1)^{r+c} det of m without row r and column c.
Polynomial cofactor(const PolyMatrix& m, std::size_t r, std::size_t c);

struct IdentityReport {
  Polynomial lhs;
  Polynomial rhs;
  Polynomial residual;
  bool holds = false;
};

/// Checks x_i A_jk - x_k A_ji = (d-1) sum_{l != j} f_l A_{l i j k} on the
/// Hessian of a homogeneous f of degree d >= 2 (0-based indices). For i = k
/// both sides are zero. Throws DomainError for non-homogeneous f.
IdentityReport verify_cofactor_identity(const Polynomial& f, std::size_t i, std::size_t j, std::size_t k);

/// sum_{l != j} f_{lt} A_{l i j k}: the determinant of M_jk with column i
/// replaced by column t, which vanishes for t not in {i, k}. Throws
/// DomainError when t is i or k, or i = k.
IdentityReport verify_column_claim(const Polynomial& f, std::size_t i, std::size_t j, std::size_t k,
                                   std::size_t t);

}  // namespace nakai
