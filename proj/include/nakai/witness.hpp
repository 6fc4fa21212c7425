#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nakai/certificate.hpp"
#include "nakai/groebner.hpp"
#include "nakai/linear_change.hpp"

namespace nakai {

struct PipelineConfig {
  int bound = 3;             ///< slice coefficients are drawn from [-bound, bound]
  unsigned retries = 200;    ///< random slices tried after the identity slice
  std::uint64_t seed = 0;
  MonomialOrder order = MonomialOrder::grevlex();
  GroebnerOptions limits;    ///< track_cofactors is managed by the pipeline
  bool prefilter = false;    ///< discard slices that fail modulo a prime first
  std::vector<Rational> slice;  ///< fixed y_1 coefficients; empty means search

  /// Throws DomainError when bound < 1 or retries < 1.
  void validate() const;
};

inline constexpr std::string_view kWitnessFound = "WITNESS_FOUND";
inline constexpr std::string_view kInputRejected = "INPUT_REJECTED";
inline constexpr std::string_view kResourceExhausted = "RESOURCE_EXHAUSTED";

struct SliceResult {
  std::vector<Rational> coefficients;  ///< y_1 = sum a_i x_i
  LinearChange change;                 ///< x in terms of y
  Polynomial g;                        ///< f after the change
  unsigned attempts;                   ///< slices examined, identity included
  GroebnerBasis restricted;            ///< (y_1, g_2, ..., g_n), with cofactors
};

/// First slice whose restriction g|_{y_1=0} has an isolated singularity:
/// the identity, then seeded draws with a_1 != 0. For weighted input only
/// variables of the same weight as x_1 enter y_1.
/// With cfg.slice set only that slice is tried.
/// Throws DomainError when f is not quasi-homogeneous or n < 3, or when a
/// fixed slice is unusable, and ResourceExhausted after cfg.retries failed draws.
SliceResult generic_slice_search(const Polynomial& f, const PipelineConfig& cfg);

struct SaitoResult {
  Polynomial jac_det;
  Polynomial normal_form;
  bool member = false;
};

/// det d(g)/d(x) against (g_1, ..., g_n). Throws DomainError unless the
/// ideal is zero-dimensional, and InternalInconsistency if the determinant
/// turns out to be a member.
SaitoResult saito_check(std::span<const Polynomial> gens, const MonomialOrder& order = MonomialOrder::grevlex());
SaitoResult saito_check(const GroebnerBasis& gb);

/// Runs the whole construction. Returns a certificate whose verdict is
/// WITNESS_FOUND, INPUT_REJECTED or RESOURCE_EXHAUSTED. A violated internal
/// assertion throws InternalInconsistency.
CertificateDocument build_witness(const Polynomial& f, const std::vector<std::string>& variables,
                                  const PipelineConfig& cfg = {});

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool ok() const;
};

/// Recomputes every claim of a WITNESS_FOUND certificate from its own data.
/// No search and no Buchberger runs: recorded bases are checked directly.
VerificationReport verify_certificate(const CertificateDocument& doc);

}  // namespace nakai
