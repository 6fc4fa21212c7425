#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nakai/polynomial.hpp"

namespace nakai {

/// Invertible linear substitution x_i = sum_j M[i][j] y_j (old variables as
/// linear forms in the new ones).
class LinearChange {
 public:
  /// Throws DomainError when the matrix is not square or is singular.
  explicit LinearChange(std::vector<std::vector<Rational>> matrix);

  static LinearChange identity(std::size_t n);
  /// The change y_1 = a_1 x_1 + ... + a_n x_n, y_i = x_i for i >= 2.
  /// Requires a_1 != 0.
  static LinearChange slice(std::span<const Rational> a);

  std::size_t size() const noexcept { return m_.size(); }
  const std::vector<std::vector<Rational>>& matrix() const noexcept { return m_; }
  /// Image of old variable x_i as a polynomial in the new variables.
  Polynomial image(std::size_t i) const;

  friend bool operator==(const LinearChange&, const LinearChange&) = default;

 private:
  std::vector<std::vector<Rational>> m_;
};

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m);

/// p(M y): every x_i replaced by its image under the change.
Polynomial substitute_linear(const Polynomial& p, const LinearChange& change);

}  // namespace nakai
