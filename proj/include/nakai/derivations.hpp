#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nakai/groebner.hpp"
#include "nakai/polynomial.hpp"

namespace nakai {

/// First-order derivation of k[x_1..x_n], given by the images of the
/// variables and extended by the Leibniz rule.
class Derivation1 {
 public:
  /// Throws ArityError unless there is one image per variable.
  explicit Derivation1(std::vector<Polynomial> images);
  static Derivation1 zero(std::size_t nvars);

  std::size_t nvars() const noexcept { return images_.size(); }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Polynomial>& images() const noexcept { return images_; }

  Derivation1& operator+=(const Derivation1& other);
  Derivation1& operator-=(const Derivation1& other);
  friend Derivation1 operator+(Derivation1 a, const Derivation1& b) { return a += b; }
  friend Derivation1 operator-(Derivation1 a, const Derivation1& b) { return a -= b; }
  /// a * delta, componentwise.
  friend Derivation1 operator*(const Polynomial& a, const Derivation1& d);
  friend bool operator==(const Derivation1&, const Derivation1&) = default;

 private:
  std::vector<Polynomial> images_;
};

/// sum_i x_i d/dx_i
Derivation1 euler_derivation(std::size_t nvars);

/// sum_i w_i x_i d/dx_i
Derivation1 weighted_euler_derivation(std::span<const unsigned> weights);

/// D_ij = f_i d/dx_j - f_j d/dx_i; x_i -> -f_j, x_j -> f_i. Throws DomainError when i == j.
Derivation1 hamiltonian(const Polynomial& f, std::size_t i, std::size_t j);

/// delta(p) = sum_i dp/dx_i * delta(x_i)
Polynomial apply_derivation(const Derivation1& d, const Polynomial& p);

/// d1 + a * d2
Derivation1 scale_and_add(const Derivation1& d1, const Polynomial& a, const Derivation1& d2);

/// q with delta(f) = q * f, or nullopt when delta does not preserve (f).
std::optional<Polynomial> preservation_cofactor(const Derivation1& d, const Polynomial& f);

/// (d_1, ..., d_n). Symmetric when d_i(x_j) == d_j(x_i) for all i, j.
class DerivationTuple {
 public:
  /// Throws ArityError unless there are n components, each in n variables.
  explicit DerivationTuple(std::vector<Derivation1> components);

  std::size_t size() const noexcept { return components_.size(); }
  std::size_t nvars() const noexcept { return components_.size(); }
  const Derivation1& operator[](std::size_t i) const { return components_.at(i); }
  Derivation1& operator[](std::size_t i) { return components_.at(i); }
  const std::vector<Derivation1>& components() const noexcept { return components_; }

  /// d_i(x_j)
  const Polynomial& entry(std::size_t i, std::size_t j) const { return components_.at(i).image(j); }
  /// d_i(x_j) - d_j(x_i)
  Polynomial asymmetry(std::size_t i, std::size_t j) const;
  bool is_symmetric() const;

  friend bool operator==(const DerivationTuple&, const DerivationTuple&) = default;

 private:
  std::vector<Derivation1> components_;
};

/// D = sum_alpha c_alpha * d_alpha with divided powers d_alpha = (1/alpha!) d^alpha,
/// |alpha| <= 2. Operators produced by this module have c_0 = 0.
class DiffOp2 {
 public:
  explicit DiffOp2(std::size_t nvars) : n_(nvars) {}

  std::size_t nvars() const noexcept { return n_; }
  /// Zero when absent.
  Polynomial coefficient(const ExponentVector& alpha) const;
  /// Throws DomainError for |alpha| > 2, ArityError on mismatched sizes.
  void set(const ExponentVector& alpha, Polynomial c);
  const std::map<ExponentVector, Polynomial>& coefficients() const noexcept { return coeffs_; }
  /// Largest |alpha| with a nonzero coefficient; nullopt for the zero operator.
  std::optional<unsigned> order() const;

  friend bool operator==(const DiffOp2&, const DiffOp2&) = default;

 private:
  std::size_t n_;
  std::map<ExponentVector, Polynomial> coeffs_;
};

Polynomial apply_diffop(const DiffOp2& d, const Polynomial& p);

/// <D, x^beta>: alpha -> c_{alpha + beta}. Throws DomainError for |beta| > 2.
DiffOp2 shift(const DiffOp2& d, const ExponentVector& beta);

/// The tuple with d_j(x_i) = c_{e_i + e_j}(D).
DerivationTuple theta2_extract(const DiffOp2& d);

/// Coefficients of the composite d1 o d2 as an operator of order <= 2.
DiffOp2 compose2(const Derivation1& d1, const Derivation1& d2);

/// Checks the order-2 defining identity
///   D(x0 x1 x2) = sum_i x_i D(x_j x_k) - sum_{i<j} x_i x_j D(x_k)
/// on each triple, exactly. Requires c_0 = 0.
bool verify_order2_identity(const DiffOp2& d, std::span<const std::array<Polynomial, 3>> triples);

/// d_i = A_{i1} E with A the cofactor matrix of Hess(f) (0-based: A_{i0}).
/// For quasi-homogeneous f the weighted Euler derivation replaces E; the
/// differences d_i(x_j) - d_j(x_i) still lie in J(f) because the Hessian maps
/// (w_i x_i) to ((D - w_j) f_j). Throws DomainError unless f is
/// quasi-homogeneous with an isolated singularity. Each component's
/// preservation of (f) is checked, not assumed.
DerivationTuple build_candidate_tuple(const Polynomial& f);
/// Same, for callers that have already established isolatedness and the weights.
DerivationTuple build_candidate_tuple(const Polynomial& f, const QuasiHomogeneity& weights);

/// d_target += coeff * D_kl
struct Adjustment {
  std::size_t target;
  std::size_t k;
  std::size_t l;
  Polynomial coeff;
  friend bool operator==(const Adjustment&, const Adjustment&) = default;
};
using AdjustmentLedger = std::vector<Adjustment>;

DerivationTuple replay_ledger(const DerivationTuple& start, const AdjustmentLedger& ledger, const Polynomial& f);

struct SymmetrizeResult {
  DerivationTuple tuple;
  AdjustmentLedger ledger;
};

/// Pair sweep (i, j), i < j, removing each component a_l f_l of
/// d_i(x_j) - d_j(x_i) with Hamiltonian adjustments that only touch pairs
/// not yet visited. `jacobian_gb`, when given, must be a cofactor-tracked
/// basis of (f_1, ..., f_n); otherwise one is computed.
/// Throws DomainError when a difference is outside J(f) and
/// InternalInconsistency when a postcondition fails.
SymmetrizeResult symmetrize(const DerivationTuple& t, const Polynomial& f,
                            const GroebnerBasis* jacobian_gb = nullptr);

/// A second-order operator with theta2_extract(D) == t and D(f) == 0: second
/// order part read off t, first-order part from lifting -D_2(f) into J(f).
/// Throws DomainError when t is not symmetric and InternalInconsistency when
/// the lift fails or a postcondition does not hold.
DiffOp2 lift_to_diff2(const DerivationTuple& t, const Polynomial& f, const GroebnerBasis* jacobian_gb = nullptr);

/// (f_1, ..., x_i^2, ..., f_n)
Ideal ji_ideal(const Polynomial& f, std::size_t i);
/// (f_1, ..., x_i, ..., f_n)^2, all pairwise products.
Ideal square_ideal(const Polynomial& f, std::size_t i);

struct NecessaryConditionReport {
  Polynomial value;       ///< d_i(x_i)
  bool in_ji;
  bool in_square;
  Polynomial nf_ji;       ///< normal form modulo J_i
  Polynomial nf_square;   ///< normal form modulo the square ideal
};

/// Tests d_i(x_i) against J_i and the square ideal. The square ideal lies in
/// J_i, so in_square without in_ji raises InternalInconsistency.
NecessaryConditionReport necessary_condition_test(const DerivationTuple& t, const Polynomial& f, std::size_t i,
                                                  const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace nakai
