#include "nakai/groebner.hpp"

#include <algorithm>
#include <set>

#include "engine.hpp"
#include "nakai/errors.hpp"

namespace nakai {

using detail::Engine;
using detail::OPoly;

namespace {

void check_order_arity(const MonomialOrder& order, std::size_t nvars) {
  if (!order.priority().empty() && order.priority().size() != nvars)
    throw ArityError("monomial order priority length does not match the variable count");
}

Polynomial to_polynomial(std::size_t nvars, const OPoly<Rational>& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.e, t.c});
  return Polynomial::from_terms(nvars, std::move(terms));
}

const Rational& identity_coeff(const Rational& q) { return q; }

/// Engine preloaded with `basis` as its element list (no pair processing).
Engine<Rational> divisor_engine(std::span<const Polynomial> basis, const MonomialOrder& order, std::size_t nvars,
                                std::vector<std::size_t>& pool) {
  Engine<Rational> eng(order, nvars, 0, GroebnerOptions{}.max_terms, false, 0);
  for (const Polynomial& g : basis) {
    if (g.nvars() != nvars) throw ArityError("divisor has a different variable count");
    if (g.is_zero()) continue;
    eng.elems().push_back({eng.convert(g, identity_coeff), {}, true});
    pool.push_back(eng.elems().size() - 1);
  }
  return eng;
}

}  // namespace

Ideal::Ideal(std::vector<Polynomial> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("an ideal needs at least one generator");
  nvars_ = generators_.front().nvars();
  for (const auto& g : generators_)
    if (g.nvars() != nvars_) throw ArityError("ideal generators have different variable counts");
}

GroebnerBasis GroebnerBasis::adopt(Ideal source, MonomialOrder order, std::vector<Polynomial> basis,
                                   std::optional<std::vector<std::vector<Polynomial>>> cofactors) {
  check_order_arity(order, source.nvars());
  for (const auto& b : basis)
    if (b.nvars() != source.nvars()) throw ArityError("basis element has a different variable count");
  if (cofactors) {
    if (cofactors->size() != basis.size()) throw ArityError("one cofactor row per basis element is required");
    for (const auto& row : *cofactors)
      if (row.size() != source.size()) throw ArityError("one cofactor per generator is required");
  }
  GroebnerBasis gb(std::move(source), std::move(order));
  gb.basis_ = std::move(basis);
  gb.cofactors_ = std::move(cofactors);
  return gb;
}

bool GroebnerBasis::is_unit() const noexcept {
  return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero();
}

const std::vector<std::vector<Polynomial>>& GroebnerBasis::cofactors() const {
  if (!cofactors_) throw DomainError("basis was computed without cofactor tracking");
  return *cofactors_;
}

std::vector<ExponentVector> GroebnerBasis::leading_monomials() const {
  std::vector<ExponentVector> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(leading_monomial(b, order_));
  return out;
}

ExponentVector leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no leading monomial");
  const auto& ts = p.terms();
  ExponentVector best = ts.front().exponent;
  for (const auto& t : ts)
    if (order.greater(t.exponent, best)) best = t.exponent;
  return best;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
  const std::size_t n = ideal.nvars();
  const std::size_t m = ideal.size();
  check_order_arity(order, n);
  Engine<Rational> eng(order, n, options.max_pairs, options.max_terms, options.track_cofactors, m);

  for (std::size_t i = 0; i < m && !eng.unit_found(); ++i) {
    const Polynomial& g = ideal.generators()[i];
    if (g.is_zero()) continue;
    std::vector<Engine<Rational>::Step> steps;
    OPoly<Rational> h = eng.reduce(eng.convert(g, identity_coeff), eng.active_indices(),
                                   options.track_cofactors ? &steps : nullptr);
    if (h.empty()) continue;
    std::vector<Polynomial> cof;
    if (options.track_cofactors) {
      cof.assign(m, Polynomial(n));
      cof[i] = Polynomial::constant(n, 1);
      auto red = eng.step_cofactors(steps);
      for (std::size_t k = 0; k < m; ++k) cof[k] -= red[k];
    }
    eng.finish_new(std::move(h), std::move(cof));
  }
  if (!eng.unit_found()) eng.run();

  GroebnerBasis gb(ideal, order);
  std::vector<std::vector<Polynomial>> cofs;
  for (std::size_t k : eng.interreduce()) {
    gb.basis_.push_back(to_polynomial(n, eng.elems()[k].poly));
    if (options.track_cofactors) cofs.push_back(eng.elems()[k].cof);
  }
  if (options.track_cofactors) gb.cofactors_ = std::move(cofs);
  return gb;
}

Division divide(const Polynomial& p, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  const std::size_t n = p.nvars();
  check_order_arity(order, n);
  std::vector<std::size_t> pool;
  Engine<Rational> eng = divisor_engine(divisors, order, n, pool);
  std::vector<Engine<Rational>::Step> steps;
  OPoly<Rational> r = eng.reduce(eng.convert(p, identity_coeff), pool, &steps);

  // Map engine element indices back to divisor positions (zeros were skipped).
  std::vector<std::size_t> position;
  for (std::size_t k = 0; k < divisors.size(); ++k)
    if (!divisors[k].is_zero()) position.push_back(k);

  Division out{to_polynomial(n, r), std::vector<Polynomial>(divisors.size(), Polynomial(n))};
  for (const auto& s : steps)
    out.quotients[position[s.elem]] += Polynomial::monomial(s.shift, s.coeff);
  return out;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, const MonomialOrder& order) {
  const std::size_t n = p.nvars();
  check_order_arity(order, n);
  std::vector<std::size_t> pool;
  Engine<Rational> eng = divisor_engine(basis, order, n, pool);
  return to_polynomial(n, eng.reduce(eng.convert(p, identity_coeff), pool, nullptr));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars()) throw ArityError("polynomial and basis have different variable counts");
  return normal_form(p, gb.basis(), gb.order());
}

std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars()) throw ArityError("polynomial and basis have different variable counts");
  const auto& cof = gb.cofactors();
  Division d = divide(p, gb.basis(), gb.order());
  if (!d.remainder.is_zero()) return std::nullopt;
  const auto& gens = gb.source().generators();
  std::vector<Polynomial> out(gens.size(), Polynomial(p.nvars()));
  for (std::size_t k = 0; k < d.quotients.size(); ++k) {
    if (d.quotients[k].is_zero()) continue;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!cof[k][i].is_zero()) out[i] += d.quotients[k] * cof[k][i];
  }
  Polynomial check(p.nvars());
  for (std::size_t i = 0; i < gens.size(); ++i) check += out[i] * gens[i];
  if (check != p) throw InternalInconsistency("membership lift failed re-multiplication");
  return out;
}

std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& p, const Ideal& ideal,
                                                       const MonomialOrder& order, const GroebnerOptions& options) {
  GroebnerOptions opts = options;
  opts.track_cofactors = true;
  return lift_membership(p, buchberger(ideal, order, opts));
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars();
  std::vector<bool> seen(n, false);
  for (const auto& lm : gb.leading_monomials()) {
    if (lm.is_zero()) return true;
    int v = lm.pure_power_variable();
    if (v >= 0) seen[std::size_t(v)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_zero_dimensional(const Ideal& ideal, const MonomialOrder& order) {
  return is_zero_dimensional(buchberger(ideal, order));
}

std::vector<ExponentVector> standard_monomials(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) throw DomainError("quotient is not finite-dimensional");
  const std::size_t n = gb.nvars();
  const auto lms = gb.leading_monomials();
  std::vector<ExponentVector> out;
  if (gb.is_unit()) return out;
  // Depth-first walk of the order ideal; every standard monomial is reached
  // from 1 by raising one exponent at a time through standard monomials.
  std::set<ExponentVector> seen;
  std::vector<ExponentVector> stack{ExponentVector(n)};
  seen.insert(stack.back());
  while (!stack.empty()) {
    ExponentVector e = stack.back();
    stack.pop_back();
    out.push_back(e);
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector next = e;
      next.set(i, e[i] + 1);
      if (seen.count(next)) continue;
      bool standard = std::none_of(lms.begin(), lms.end(), [&](const ExponentVector& lm) { return lm.divides(next); });
      if (!standard) continue;
      seen.insert(next);
      stack.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [&](const ExponentVector& a, const ExponentVector& b) {
    return gb.order().greater(b, a);
  });
  return out;
}

std::size_t quotient_dimension(const GroebnerBasis& gb) { return standard_monomials(gb).size(); }

std::size_t quotient_dimension(const Ideal& ideal, const MonomialOrder& order) {
  return quotient_dimension(buchberger(ideal, order));
}

Ideal jacobian_ideal(const Polynomial& f) {
  if (f.nvars() == 0) throw DomainError("polynomial has no variables");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(partial(f, i));
  return Ideal(std::move(gens));
}

bool is_isolated_singularity(const Polynomial& f, const MonomialOrder& order) {
  auto d = homogeneous_degree(f);
  if (!d) throw DomainError("polynomial is not homogeneous");
  if (*d < 2) return false;
  return is_zero_dimensional(jacobian_ideal(f), order);
}

bool is_isolated_quasi_homogeneous(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero() || f.is_constant()) throw DomainError("constant polynomial");
  if (!quasi_homogeneous_weights(f)) throw DomainError("polynomial is not quasi-homogeneous");
  for (const Term& t : f.terms())
    if (t.exponent.degree() < 2) return false;
  return is_zero_dimensional(jacobian_ideal(f), order);
}

bool is_regular_sequence_homog(std::span<const Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty()) throw ArityError("empty sequence");
  const std::size_t n = gens.front().nvars();
  if (gens.size() != n) throw ArityError("need exactly one polynomial per variable");
  for (const auto& g : gens) {
    if (g.nvars() != n) throw ArityError("sequence elements have different variable counts");
    if (g.is_zero()) return false;
    if (!homogeneous_degree(g)) throw DomainError("sequence element is not homogeneous");
  }
  return is_zero_dimensional(Ideal(std::vector<Polynomial>(gens.begin(), gens.end())), order);
}

GroebnerRecordCheck check_groebner_record(std::span<const Polynomial> generators, std::span<const Polynomial> basis,
                                          const MonomialOrder& order,
                                          const std::vector<std::vector<Polynomial>>* cofactors) {
  GroebnerRecordCheck out;
  if (generators.empty()) return out;
  const std::size_t n = generators.front().nvars();
  for (const auto& g : generators)
    if (g.nvars() != n) return out;
  for (const auto& b : basis)
    if (b.nvars() != n || b.is_zero()) return out;
  check_order_arity(order, n);

  out.generators_reduce_to_zero = std::all_of(generators.begin(), generators.end(), [&](const Polynomial& g) {
    return normal_form(g, basis, order).is_zero();
  });

  std::vector<ExponentVector> lms;
  for (const auto& b : basis) lms.push_back(leading_monomial(b, order));

  bool spairs = true;
  for (std::size_t i = 0; i < basis.size() && spairs; ++i) {
    for (std::size_t j = i + 1; j < basis.size() && spairs; ++j) {
      if (ExponentVector::coprime(lms[i], lms[j])) continue;
      ExponentVector l = ExponentVector::lcm(lms[i], lms[j]);
      Rational ci = basis[i].coefficient(lms[i]), cj = basis[j].coefficient(lms[j]);
      Polynomial s = basis[i].times_term(l - lms[i], Rational(1) / ci) - basis[j].times_term(l - lms[j], Rational(1) / cj);
      if (!normal_form(s, basis, order).is_zero()) spairs = false;
    }
  }
  out.s_pairs_reduce_to_zero = spairs;

  bool reduced = true;
  for (std::size_t i = 0; i < basis.size() && reduced; ++i) {
    if (basis[i].coefficient(lms[i]) != 1) reduced = false;
    for (const auto& t : basis[i].terms())
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i && lms[j].divides(t.exponent)) reduced = false;
  }
  out.reduced = reduced;

  if (cofactors) {
    bool ok = cofactors->size() == basis.size();
    for (std::size_t k = 0; ok && k < basis.size(); ++k) {
      const auto& row = (*cofactors)[k];
      if (row.size() != generators.size()) {
        ok = false;
        break;
      }
      Polynomial sum(n);
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].nvars() != n) {
          ok = false;
          break;
        }
        sum += row[i] * generators[i];
      }
      if (ok && sum != basis[k]) ok = false;
    }
    out.cofactors_valid = ok;
  }
  return out;
}

std::optional<bool> is_zero_dimensional_mod_p(const Ideal& ideal, const MonomialOrder& order) {
  constexpr std::uint32_t kPrime = 32003;
  using F = detail::Zp<kPrime>;
  const std::size_t n = ideal.nvars();
  check_order_arity(order, n);
  try {
    Engine<F> eng(order, n, GroebnerOptions{}.max_pairs, GroebnerOptions{}.max_terms, false, ideal.size());
    for (const auto& g : ideal.generators()) {
      OPoly<F> h = eng.reduce(eng.convert(g, detail::zp_from<kPrime>), eng.active_indices(), nullptr);
      if (h.empty()) continue;
      eng.finish_new(std::move(h), {});
      if (eng.unit_found()) return true;
    }
    eng.run();
    if (eng.unit_found()) return true;
    std::vector<bool> seen(n, false);
    for (std::size_t k : eng.active_indices()) {
      int v = eng.elems()[k].poly.front().e.pure_power_variable();
      if (v >= 0) seen[std::size_t(v)] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  } catch (const detail::BadReduction&) {
    return std::nullopt;
  }
}

}  // namespace nakai
