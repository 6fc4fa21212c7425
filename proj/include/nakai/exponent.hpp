#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>

#include "nakai/errors.hpp"

namespace nakai {

inline constexpr std::size_t kMaxVars = 8;

/// Multi-index alpha in (Z+)^n. Slots past `size()` are always zero.
class ExponentVector {
 public:
  using value_type = std::uint16_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : n_(checked_arity(n)) {}
  ExponentVector(std::initializer_list<unsigned> exps) : n_(checked_arity(exps.size())) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }
  explicit ExponentVector(std::span<const unsigned> exps) : n_(checked_arity(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  /// e_i: 1 in slot i.
  static ExponentVector unit(std::size_t n, std::size_t i) {
    ExponentVector e(n);
    e.set(i, 1);
    return e;
  }

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned value) {
    if (i >= n_) throw DomainError("exponent index out of range");
    if (value > 0xFFFFu) throw DomainError("exponent exceeds 65535");
    e_[i] = static_cast<value_type>(value);
  }

  /// |alpha|
  unsigned degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), 0u);
  }
  bool is_zero() const noexcept { return degree() == 0; }

  /// alpha! as an integer-valued double-free product; small enough for every use here.
  unsigned long long factorial() const noexcept {
    unsigned long long r = 1;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned k = 2; k <= e_[i]; ++k) r *= k;
    return r;
  }

  /// True when this divides `other` (componentwise <=).
  bool divides(const ExponentVector& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.n_ != b.n_) throw ArityError("exponent vectors of different length");
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, unsigned(a.e_[i]) + b.e_[i]);
    return r;
  }
  /// Componentwise difference; requires b.divides(a).
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    if (a.n_ != b.n_) throw ArityError("exponent vectors of different length");
    if (!b.divides(a)) throw DomainError("exponent subtraction would go negative");
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = value_type(a.e_[i] - b.e_[i]);
    return r;
  }

  static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }
  static bool coprime(const ExponentVector& a, const ExponentVector& b) noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  /// Index of the single variable when this is a pure power x_i^m (m >= 1), else -1.
  int pure_power_variable() const noexcept {
    int var = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] == 0) continue;
      if (var >= 0) return -1;
      var = static_cast<int>(i);
    }
    return var;
  }

  std::span<const value_type> exponents() const noexcept { return {e_.data(), n_}; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison on the raw slots; used for container keys only.
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  static std::uint8_t checked_arity(std::size_t n) {
    if (n > kMaxVars) throw DomainError("at most 8 variables are supported");
    return static_cast<std::uint8_t>(n);
  }

  std::array<value_type, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& e) const noexcept {
    std::size_t h = e.size();
    for (auto v : e.exponents()) h = h * 1000003u ^ v;
    return h;
  }
};

}  // namespace nakai
