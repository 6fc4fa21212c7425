#include "nakai/monomial_order.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace nakai {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw DomainError("variable priority is not a permutation");
  // The identity permutation is stored as empty so equal orders compare equal.
  bool identity = true;
  for (std::size_t i = 0; i < priority_.size(); ++i) identity = identity && priority_[i] == i;
  if (identity) priority_.clear();
}

std::strong_ordering MonomialOrder::lex_compare(const ExponentVector& a,
                                                const ExponentVector& b) const noexcept {
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::size_t v = var(r);
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            const ExponentVector& b) const noexcept {
  switch (kind_) {
    case OrderKind::lex:
      return lex_compare(a, b);
    case OrderKind::grlex:
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      return lex_compare(a, b);
    case OrderKind::grevlex:
      break;
  }
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t r = a.size(); r-- > 0;) {
    std::size_t v = var(r);
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grlex:
      return "grlex";
    case OrderKind::grevlex:
      break;
  }
  return "grevlex";
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grlex") return MonomialOrder::grlex();
  throw DomainError("unknown monomial order '" + std::string(name) + "'");
}

}  // namespace nakai
