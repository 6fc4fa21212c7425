#include "nakai/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace nakai {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Rational q;
  q.get_num() = Integer(std::string(num));
  q.get_den() = Integer(std::string(den));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

}  // namespace nakai
