#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakai/polynomial.hpp"

namespace nakai {

inline constexpr std::string_view kCertificateSchema = "nakai-forge/certificate/v1";

/// Generators, the reduced basis computed from them and, optionally, the
/// expression of each basis element in the generators.
struct GroebnerRecord {
  std::vector<Polynomial> generators;
  std::vector<Polynomial> basis;
  std::optional<std::vector<std::vector<Polynomial>>> cofactors;
  friend bool operator==(const GroebnerRecord&, const GroebnerRecord&) = default;
};

struct MembershipRecord {
  Polynomial value;
  Polynomial normal_form;
  bool member = false;
  GroebnerRecord ideal;
  friend bool operator==(const MembershipRecord&, const MembershipRecord&) = default;
};

struct SaitoRecord {
  Polynomial determinant;  ///< det d(y_1^2, g_2, ..., g_n)/d(y)
  Polynomial normal_form;  ///< modulo the J_1 basis
  bool member = false;
  friend bool operator==(const SaitoRecord&, const SaitoRecord&) = default;
};

/// d_i(x_j) - d_j(x_i) = sum_l coefficients[l] * g_l. Indices are 0-based in
/// memory and 1-based in the document.
struct DifferenceRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial difference;
  std::vector<Polynomial> coefficients;
  friend bool operator==(const DifferenceRecord&, const DifferenceRecord&) = default;
};

/// d_target += coeff * D_kl
struct AdjustmentRecord {
  std::size_t target = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  Polynomial coeff;
  friend bool operator==(const AdjustmentRecord&, const AdjustmentRecord&) = default;
};

struct OperatorTerm {
  ExponentVector alpha;
  Polynomial coeff;
  friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

struct CertificateInput {
  std::vector<std::string> variables;
  Polynomial f;
  std::vector<unsigned> weights;  ///< empty when f is not quasi-homogeneous
  unsigned weighted_degree = 0;
  std::string order = "grevlex";
  friend bool operator==(const CertificateInput&, const CertificateInput&) = default;
};

/// y_1 = sum a_i x_i, y_i = x_i otherwise; g(y) = f(x).
struct CoordinateRecord {
  std::vector<std::string> variables;
  std::vector<Rational> slice;
  unsigned attempts = 0;
  Polynomial g;
  GroebnerRecord restricted_jacobian;  ///< (y_1, g_2, ..., g_n)
  friend bool operator==(const CoordinateRecord&, const CoordinateRecord&) = default;
};

struct CandidateRecord {
  std::vector<std::vector<Polynomial>> tuple;  ///< tuple[i][j] = d_i(y_j)
  std::vector<DifferenceRecord> differences;
  friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

struct MembershipTests {
  GroebnerRecord jacobian;  ///< (g_1, ..., g_n)
  MembershipRecord ji;      ///< d'_1(y_1) against (y_1^2, g_2, ..., g_n)
  MembershipRecord square;  ///< d'_1(y_1) against (y_1, g_2, ..., g_n)^2
  SaitoRecord saito;
  friend bool operator==(const MembershipTests&, const MembershipTests&) = default;
};

struct CertificateDocument {
  std::string schema{kCertificateSchema};
  CertificateInput input;
  std::string verdict;  ///< WITNESS_FOUND | INPUT_REJECTED | RESOURCE_EXHAUSTED
  std::string message;
  std::optional<CoordinateRecord> change;
  std::optional<CandidateRecord> candidate;
  std::optional<std::vector<AdjustmentRecord>> adjustments;
  std::optional<std::vector<std::vector<Polynomial>>> symmetric_tuple;
  std::optional<std::vector<OperatorTerm>> lifted_operator;
  std::optional<MembershipTests> membership;
  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

/// Pretty-printed JSON; keys in a fixed order, so equal documents give equal bytes.
std::string write_certificate(const CertificateDocument& doc);

/// Throws SchemaError on a version mismatch or a malformed document.
CertificateDocument read_certificate(std::string_view text);

}  // namespace nakai
