#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nakai/exponent.hpp"

namespace nakai {

enum class OrderKind { grevlex, lex, grlex };

/// A term order on exponent vectors. `priority[0]` is the largest variable;
/// an empty priority means the natural order x_1 > x_2 > ... > x_n.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> priority = {});

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  /// `greater` when a is the larger monomial.
  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const noexcept;
  bool greater(const ExponentVector& a, const ExponentVector& b) const noexcept {
    return compare(a, b) == std::strong_ordering::greater;
  }

  std::string name() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::size_t var(std::size_t rank) const noexcept {
    return priority_.empty() ? rank : priority_[rank];
  }
  std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b) const noexcept;

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> priority_;
};

/// "grevlex" | "lex" | "grlex"; throws DomainError otherwise.
MonomialOrder parse_order(std::string_view name);

}  // namespace nakai
