#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nakai/expr.hpp"
#include "nakai/groebner.hpp"
#include "nakai/polynomial.hpp"

namespace nakai::testing {

inline const std::vector<std::string> kXYZ = {"x", "y", "z"};
inline const std::vector<std::string> kXY = {"x", "y"};

inline Polynomial P(const std::string& text, const std::vector<std::string>& vars = kXYZ) {
  return parse_poly(text, vars);
}

/// Small deterministic generator for test inputs.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int bound = 5) {
    int num = integer(-bound, bound);
    int den = integer(1, 3);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  ExponentVector exponent_of_degree(std::size_t n, unsigned d) {
    ExponentVector e(n);
    for (unsigned k = 0; k < d; ++k) {
      std::size_t i = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
      e.set(i, e[i] + 1);
    }
    return e;
  }

  /// Random polynomial with up to `terms` terms of degree <= max_degree.
  Polynomial poly(std::size_t n, unsigned max_degree, int terms) {
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
      Rational c = rational();
      ts.push_back({exponent_of_degree(n, static_cast<unsigned>(integer(0, static_cast<int>(max_degree)))), c});
    }
    return Polynomial::from_terms(n, std::move(ts));
  }

  Polynomial homogeneous(std::size_t n, unsigned d, int terms, int bound = 5) {
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) ts.push_back({exponent_of_degree(n, d), Rational(integer(-bound, bound))});
    return Polynomial::from_terms(n, std::move(ts));
  }

  /// Sum of pure powers with nonzero coefficients plus `extra` random
  /// monomials of the same degree, redrawn until the singularity is isolated.
  Polynomial isolated_homogeneous(std::size_t n, unsigned d, int extra) {
    for (;;) {
      std::vector<Term> ts;
      for (std::size_t i = 0; i < n; ++i) {
        ExponentVector e(n);
        e.set(i, d);
        int c = integer(1, 3) * (coin() ? 1 : -1);
        ts.push_back({e, Rational(c)});
      }
      for (int k = 0; k < extra; ++k) ts.push_back({exponent_of_degree(n, d), Rational(integer(-3, 3))});
      Polynomial f = Polynomial::from_terms(n, std::move(ts));
      if (homogeneous_degree(f) == d && is_isolated_singularity(f)) return f;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nakai::testing
