#include "nakai/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace nakai {

namespace {

constexpr unsigned kMaxExponent = 1024;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), n_(vars.size()) {
    if (vars.size() > kMaxVars) throw DomainError("at most 8 variables are supported");
    for (std::size_t i = 0; i < vars.size(); ++i) index_.emplace(vars[i], i);
  }

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() {
    skip_space();
    return at_end() ? '\0' : text_[pos_];
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      if (c == '+')
        acc += term();
      else
        acc -= term();
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
        continue;
      }
      // Juxtaposition ("2x", "x y", "x(y)") is rejected explicitly.
      if (!at_end() && (ident_start(c) || digit(c) || c == '('))
        throw ParseError("missing '*' (implicit multiplication is not allowed)", pos_);
      return acc;
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    if (!at_end() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
    std::size_t start = pos_;
    while (!at_end() && digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected a non-negative integer exponent", start);
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 5 || std::stoul(digits) > kMaxExponent)
      throw ParseError("exponent too large", start);
    return b.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial base() {
    char c = peek();
    std::size_t start = pos_;
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (digit(c)) {
      while (!at_end() && digit(text_[pos_])) ++pos_;
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den_start = pos_;
        while (!at_end() && digit(text_[pos_])) ++pos_;
        if (den_start == pos_) throw ParseError("expected denominator digits", den_start);
      }
      Rational q;
      try {
        q = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        throw ParseError("zero denominator", start);
      }
      return Polynomial::constant(n_, q);
    }
    if (ident_start(c)) {
      while (!at_end() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) throw ParseError("unknown identifier '" + name + "'", start);
      return Polynomial::variable(n_, it->second);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

// Natural order: digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && digit(a[i2])) ++i2;
      while (j2 < b.size() && digit(b[j2])) ++j2;
      std::string_view na = std::string_view(a).substr(i, i2 - i);
      std::string_view nb = std::string_view(b).substr(j, j2 - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

}  // namespace

Polynomial parse_poly(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).run();
}

Polynomial parse_poly(const PolySource& src) { return parse_poly(src.text, src.variables); }

std::string format_poly(const Polynomial& p, std::span<const std::string> variables,
                        const MonomialOrder& order) {
  if (variables.size() != p.nvars()) throw ArityError("variable list does not match polynomial");
  if (p.is_zero()) return "0";
  std::vector<const Term*> terms;
  for (const Term& t : p.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term* a, const Term* b) { return order.greater(a->exponent, b->exponent); });
  std::string out;
  bool first = true;
  for (const Term* t : terms) {
    Rational mag = abs(t->coeff);
    bool negative = t->coeff < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      unsigned e = t->exponent[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variables[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

std::vector<std::string> indexed_variables(std::size_t n, std::string_view stem) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::string(stem) + std::to_string(i));
  return v;
}

std::vector<std::string> infer_variables(std::span<const std::string> texts) {
  std::set<std::string> names;
  for (const std::string& s : texts) {
    for (std::size_t i = 0; i < s.size();) {
      if (ident_start(s[i]) && (i == 0 || !ident_char(s[i - 1]))) {
        std::size_t j = i;
        while (j < s.size() && ident_char(s[j])) ++j;
        names.insert(s.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  }
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

std::vector<std::string> parse_variable_list(std::string_view list) {
  std::vector<std::string> out;
  std::stringstream ss{std::string(list)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw DomainError("empty variable name in list");
    item = item.substr(b, e - b + 1);
    if (!ident_start(item[0]) || !std::all_of(item.begin(), item.end(), ident_char))
      throw DomainError("'" + item + "' is not a valid variable name");
    if (std::find(out.begin(), out.end(), item) != out.end())
      throw DomainError("variable '" + item + "' listed twice");
    out.push_back(item);
  }
  if (out.size() > kMaxVars) throw DomainError("at most 8 variables are supported");
  return out;
}

}  // namespace nakai
