#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nakai/monomial_order.hpp"
#include "nakai/polynomial.hpp"

namespace nakai {

/// Generators of an ideal in a fixed polynomial ring.
class Ideal {
 public:
  /// Throws DomainError when empty, ArityError on mixed variable counts.
  explicit Ideal(std::vector<Polynomial> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

 private:
  std::vector<Polynomial> generators_;
  std::size_t nvars_ = 0;
};

struct GroebnerOptions {
  /// Record, for every basis element, its expression in the generators.
  bool track_cofactors = false;
  /// Hard caps; exceeding either throws ResourceExhausted.
  std::size_t max_pairs = 100000;
  std::size_t max_terms = 1000000;
};

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
class GroebnerBasis {
 public:
  /// Wraps an already-reduced basis without checking it. Used when replaying
  /// recorded data; see `check_groebner_record` for the validating path.
  static GroebnerBasis adopt(Ideal source, MonomialOrder order, std::vector<Polynomial> basis,
                             std::optional<std::vector<std::vector<Polynomial>>> cofactors = std::nullopt);

  const Ideal& source() const noexcept { return source_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  std::size_t nvars() const noexcept { return source_.nvars(); }
  bool is_unit() const noexcept;

  bool has_cofactors() const noexcept { return cofactors_.has_value(); }
  /// basis()[k] == sum_i cofactors()[k][i] * source().generators()[i]
  const std::vector<std::vector<Polynomial>>& cofactors() const;

  std::vector<ExponentVector> leading_monomials() const;

 private:
  GroebnerBasis(Ideal source, MonomialOrder order) : source_(std::move(source)), order_(std::move(order)) {}
  friend GroebnerBasis buchberger(const Ideal&, const MonomialOrder&, const GroebnerOptions&);

  Ideal source_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::optional<std::vector<std::vector<Polynomial>>> cofactors_;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                         const GroebnerOptions& options = {});

/// Leading exponent of a nonzero polynomial under `order`.
ExponentVector leading_monomial(const Polynomial& p, const MonomialOrder& order);

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  ///< one per divisor
};

/// Full multivariate division: p = sum quotients[k] * divisors[k] + remainder,
/// with no term of the remainder divisible by a leading monomial of a divisor.
Division divide(const Polynomial& p, std::span<const Polynomial> divisors, const MonomialOrder& order);

/// Unique fully reduced remainder; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, const MonomialOrder& order);

/// Coefficients q with sum q_i g_i == p over the generators of `gb.source()`,
/// or nullopt when p is not a member. Needs a basis built with cofactor
/// tracking. The result is re-multiplied and checked before it is returned.
std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& p, const GroebnerBasis& gb);
std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& p, const Ideal& ideal,
                                                       const MonomialOrder& order = MonomialOrder::grevlex(),
                                                       const GroebnerOptions& options = {});

/// Every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& gb);
bool is_zero_dimensional(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

/// Monomials outside the leading-term ideal. Throws DomainError when not zero-dimensional.
std::vector<ExponentVector> standard_monomials(const GroebnerBasis& gb);
std::size_t quotient_dimension(const GroebnerBasis& gb);
std::size_t quotient_dimension(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

/// (f_1, ..., f_n)
Ideal jacobian_ideal(const Polynomial& f);

/// Homogeneous f of degree >= 2 whose Jacobian ideal is zero-dimensional.
/// Throws DomainError for non-homogeneous (or zero) input. Degree < 2 gives false.
bool is_isolated_singularity(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex());

/// Weighted-homogeneous variant: f has no constant or linear term and J(f)
/// is zero-dimensional. Throws DomainError unless f is quasi-homogeneous.
bool is_isolated_quasi_homogeneous(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex());

/// n homogeneous polynomials in n variables form a regular sequence iff they
/// generate a zero-dimensional ideal. Throws ArityError / DomainError when
/// the count or homogeneity precondition fails.
bool is_regular_sequence_homog(std::span<const Polynomial> gens,
                               const MonomialOrder& order = MonomialOrder::grevlex());

/// Independent validation of a recorded basis, without running Buchberger.
struct GroebnerRecordCheck {
  bool generators_reduce_to_zero = false;  ///< ideal(gens) is inside ideal(basis)
  bool s_pairs_reduce_to_zero = false;     ///< basis is a Groebner basis of its ideal
  bool reduced = false;                    ///< monic, minimal, tails irreducible
  std::optional<bool> cofactors_valid;     ///< basis inside ideal(gens), when cofactors given
  bool ok() const noexcept {
    return generators_reduce_to_zero && s_pairs_reduce_to_zero && reduced && cofactors_valid.value_or(true);
  }
};
GroebnerRecordCheck check_groebner_record(std::span<const Polynomial> generators, std::span<const Polynomial> basis,
                                          const MonomialOrder& order,
                                          const std::vector<std::vector<Polynomial>>* cofactors = nullptr);

/// Zero-dimensionality over Z/p (p = 32003). nullopt when a coefficient
/// denominator vanishes mod p. Advisory only: bad primes can disagree with Q.
std::optional<bool> is_zero_dimensional_mod_p(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace nakai
