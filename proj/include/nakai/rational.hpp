#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nakai {

/// Arbitrary-precision rational, kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num" or "num/den"; the form used by every text format in the project.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "num" or "num/den" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace nakai
