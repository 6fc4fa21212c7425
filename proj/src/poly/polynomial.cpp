#include "nakai/polynomial.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace nakai {

bool canonical_greater(const ExponentVector& a, const ExponentVector& b) noexcept {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

// Sorts, merges equal exponents and drops zeros in place.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return canonical_greater(x.exponent, y.exponent); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exponent == acc.exponent; ++j) acc.coeff += terms[j].coeff;
    if (acc.coeff != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists with b scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_greater(a[i].exponent, b[j].exponent))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_greater(b[j].exponent, a[i].exponent)) {
      out.push_back({b[j].exponent, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars) : n_(nvars) {
  if (nvars > kMaxVars) throw DomainError("at most 8 variables are supported");
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({ExponentVector(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DomainError("variable index out of range");
  return monomial(ExponentVector::unit(nvars, i));
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c) {
  Polynomial p(e.size());
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const Term& t : terms)
    if (t.exponent.size() != nvars) throw ArityError("term arity does not match polynomial");
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVector& key) {
    return canonical_greater(t.exponent, key);
  });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded order: the first term has the largest degree.
  return terms_.front().exponent.degree();
}

void Polynomial::require_same_arity(const Polynomial& other) const {
  if (n_ != other.n_)
    throw ArityError("polynomials in " + std::to_string(n_) + " and " + std::to_string(other.n_) +
                     " variables");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(other);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_arity(other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_arity(b);
  Polynomial r(a.n_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) prod.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
  normalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::times_term(const ExponentVector& e, const Rational& c) const {
  if (e.size() != n_) throw ArityError("monomial arity does not match polynomial");
  Polynomial r(n_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any term order.
  for (const Term& t : terms_) r.terms_.push_back({t.exponent + e, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial higher_partial(const Polynomial& p, const ExponentVector& alpha) {
  if (alpha.size() != p.nvars()) throw ArityError("multi-index arity does not match polynomial");
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    if (!alpha.divides(t.exponent)) continue;
    Integer scale = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), t.exponent[i], alpha[i]);
      scale *= binom;
    }
    out.push_back({t.exponent - alpha, t.coeff * Rational(scale)});
  }
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

Polynomial partial(const Polynomial& p, std::size_t i) {
  if (i >= p.nvars()) throw DomainError("partial: variable index out of range");
  return higher_partial(p, ExponentVector::unit(p.nvars(), i));
}

std::optional<unsigned> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("homogeneous_degree of the zero polynomial");
  unsigned d = p.terms().front().exponent.degree();
  for (const Term& t : p.terms())
    if (t.exponent.degree() != d) return std::nullopt;
  return d;
}

Polynomial euler_apply(const Polynomial& p) {
  std::vector<Term> scaled;
  scaled.reserve(p.term_count());
  for (const Term& t : p.terms()) scaled.push_back({t.exponent, t.coeff * t.exponent.degree()});
  return Polynomial::from_terms(p.nvars(), std::move(scaled));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw ArityError("evaluation point has the wrong length");
  Rational sum = 0;
  for (const Term& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), t.exponent[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), t.exponent[i]);
      v *= power;
    }
    sum += v;
  }
  return sum;
}

}  // namespace nakai
