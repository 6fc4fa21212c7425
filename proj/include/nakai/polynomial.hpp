#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nakai/exponent.hpp"
#include "nakai/rational.hpp"

namespace nakai {

struct Term {
  ExponentVector exponent;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are kept sorted in descending graded-reverse-lexicographic order with
/// no zero coefficients, so two equal polynomials always have identical term
/// lists. Binary operations require equal variable counts and throw ArityError
/// otherwise.
class Polynomial {
 public:
  /// The zero polynomial in `nvars` variables.
  explicit Polynomial(std::size_t nvars = 0);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const ExponentVector& e, const Rational& c = 1);
  /// Merges duplicate exponents, drops zeros and sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational coefficient(const ExponentVector& e) const;
  /// Largest total degree of a term; nullopt for zero.
  std::optional<unsigned> total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// this * c * x^e
  Polynomial times_term(const ExponentVector& e, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void require_same_arity(const Polynomial& other) const;

  std::vector<Term> terms_;
  std::size_t n_ = 0;
};

/// Descending canonical order used for storage.
bool canonical_greater(const ExponentVector& a, const ExponentVector& b) noexcept;

/// d p / d x_i. Throws DomainError when i >= nvars.
Polynomial partial(const Polynomial& p, std::size_t i);

/// (1/alpha!) d^|alpha| p / d x^alpha, the divided-power derivative.
Polynomial higher_partial(const Polynomial& p, const ExponentVector& alpha);

/// d when every term has total degree d, nullopt when degrees are mixed.
/// Throws DomainError for the zero polynomial.
std::optional<unsigned> homogeneous_degree(const Polynomial& p);

/// sum_i x_i dp/dx_i
Polynomial euler_apply(const Polynomial& p);

/// Positive coprime integer weights w and degree D with sum_i w_i alpha_i = D
/// for every term x^alpha of f.
struct QuasiHomogeneity {
  std::vector<unsigned> weights;
  unsigned degree = 0;
  bool homogeneous() const noexcept;
  friend bool operator==(const QuasiHomogeneity&, const QuasiHomogeneity&) = default;
};

/// Homogeneous f gives all-ones weights and D = deg f. Otherwise the weights
/// must be determined uniquely by the support of f; nullopt when they are
/// not, or when some weight would be non-positive. Throws DomainError for zero
/// or constant f.
std::optional<QuasiHomogeneity> quasi_homogeneous_weights(const Polynomial& f);

/// Exact value at a rational point. Throws ArityError on a length mismatch.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

}  // namespace nakai
