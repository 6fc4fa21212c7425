#include "nakai/witness.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

#include "nakai/derivations.hpp"
#include "nakai/errors.hpp"
#include "nakai/expr.hpp"
#include "nakai/log.hpp"
#include "nakai/symdet.hpp"

namespace nakai {

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

// Uniform integer in [-bound, bound] from raw 64-bit draws; the rejection
// step keeps the result identical on every platform.
long draw(std::mt19937_64& rng, int bound) {
  const std::uint64_t m = 2 * std::uint64_t(bound) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % m;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return long(r % m) - bound;
}

Ideal restricted_ideal(const Polynomial& g) {
  const std::size_t n = g.nvars();
  std::vector<Polynomial> gens{Polynomial::variable(n, 0)};
  for (std::size_t i = 1; i < n; ++i) gens.push_back(partial(g, i));
  return Ideal(std::move(gens));
}

std::vector<Polynomial> jacobian_gens(const Polynomial& g) { return jacobian_ideal(g).generators(); }

GroebnerBasis compute(const Ideal& ideal, const PipelineConfig& cfg, bool track) {
  GroebnerOptions opt = cfg.limits;
  opt.track_cofactors = track;
  return buchberger(ideal, cfg.order, opt);
}

GroebnerRecord record(const GroebnerBasis& gb) {
  GroebnerRecord r{gb.source().generators(), gb.basis(), std::nullopt};
  if (gb.has_cofactors()) r.cofactors = gb.cofactors();
  return r;
}

Matrix tuple_matrix(const DerivationTuple& t) {
  Matrix out;
  for (const auto& d : t.components()) out.push_back(d.images());
  return out;
}

DerivationTuple tuple_from(const Matrix& m) {
  std::vector<Derivation1> comps;
  for (const auto& row : m) comps.emplace_back(row);
  return DerivationTuple(std::move(comps));
}

std::vector<std::string> new_variable_names(const std::vector<std::string>& old) {
  for (const char* stem : {"y", "u", "v", "w", "t"}) {
    auto names = indexed_variables(old.size(), stem);
    bool clash = std::any_of(names.begin(), names.end(),
                             [&](const std::string& s) { return std::find(old.begin(), old.end(), s) != old.end(); });
    if (!clash) return names;
  }
  return indexed_variables(old.size(), "new_y");
}

Polynomial jacobian_det(std::span<const Polynomial> gens) { return determinant(jacobian_matrix(gens)); }

/// Reason for rejecting f, or empty when the pipeline can run.
std::string input_problem(const Polynomial& f, const PipelineConfig& cfg, std::optional<QuasiHomogeneity>& weights) {
  const std::size_t n = f.nvars();
  if (n < 3) return "need at least 3 variables (the two-variable case is classical and not handled)";
  if (f.is_zero() || f.is_constant()) return "f is constant";
  weights = quasi_homogeneous_weights(f);
  if (!weights) return "f is not homogeneous (nor quasi-homogeneous with unique positive weights)";
  if (weights->homogeneous() && weights->degree < 2) return "f has degree < 2";
  for (const Term& t : f.terms())
    if (t.exponent.degree() < 2) return "f is not singular at the origin (it has a linear term)";
  if (!is_zero_dimensional(compute(jacobian_ideal(f), cfg, false)))
    return "f does not define an isolated singularity (J(f) is not zero-dimensional)";
  return {};
}

}  // namespace

void PipelineConfig::validate() const {
  if (bound < 1) throw DomainError("coefficient bound must be at least 1");
  if (retries < 1) throw DomainError("retries must be at least 1");
  if (!order.priority().empty()) throw DomainError("the pipeline uses the natural variable priority");
}

SliceResult generic_slice_search(const Polynomial& f, const PipelineConfig& cfg) {
  cfg.validate();
  const std::size_t n = f.nvars();
  if (n < 3) throw DomainError("slice search needs at least 3 variables");
  auto weights = quasi_homogeneous_weights(f);
  if (!weights) throw DomainError("f is not quasi-homogeneous");

  std::vector<Rational> a(n, 0);
  a[0] = 1;
  unsigned last = cfg.retries;
  if (!cfg.slice.empty()) {
    if (cfg.slice.size() != n) throw ArityError("fixed slice needs one coefficient per variable");
    if (cfg.slice[0] == 0) throw DomainError("fixed slice needs a nonzero first coefficient");
    for (std::size_t j = 1; j < n; ++j)
      if (cfg.slice[j] != 0 && weights->weights[j] != weights->weights[0])
        throw DomainError("fixed slice mixes variables of different weight");
    a = cfg.slice;
    last = 0;
  }

  std::mt19937_64 rng(cfg.seed);
  for (unsigned attempt = 0; attempt <= last; ++attempt) {
    if (attempt > 0) {
      long a1 = 0;
      while (a1 == 0) a1 = draw(rng, cfg.bound);
      a[0] = a1;
      for (std::size_t j = 1; j < n; ++j) a[j] = weights->weights[j] == weights->weights[0] ? draw(rng, cfg.bound) : 0;
    }
    LinearChange change = LinearChange::slice(a);
    Polynomial g = substitute_linear(f, change);
    Ideal restricted = restricted_ideal(g);
    if (cfg.prefilter && is_zero_dimensional_mod_p(restricted, cfg.order) == std::optional<bool>(false)) {
      log_line(LogLevel::debug, "slice " + std::to_string(attempt) + " discarded by the modular pre-filter");
      continue;
    }
    GroebnerBasis gb = compute(restricted, cfg, true);
    if (is_zero_dimensional(gb)) {
      log_line(LogLevel::info, "slice found after " + std::to_string(attempt + 1) + " attempt(s)");
      return SliceResult{a, change, g, attempt + 1, gb};
    }
    log_line(LogLevel::debug, "slice " + std::to_string(attempt) + " is not generic");
  }
  if (!cfg.slice.empty()) throw DomainError("the fixed slice is not generic");
  throw ResourceExhausted("no generic slice found within the retry limit");
}

SaitoResult saito_check(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) throw DomainError("Saito check needs a zero-dimensional ideal");
  const auto& gens = gb.source().generators();
  if (gens.size() != gb.nvars()) throw ArityError("Saito check needs n generators in n variables");
  SaitoResult r;
  r.jac_det = jacobian_det(gens);
  r.normal_form = normal_form(r.jac_det, gb);
  r.member = r.normal_form.is_zero();
  if (r.member) throw InternalInconsistency("Jacobian determinant lies in a zero-dimensional ideal");
  return r;
}

SaitoResult saito_check(std::span<const Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty()) throw ArityError("empty generator list");
  return saito_check(buchberger(Ideal(std::vector<Polynomial>(gens.begin(), gens.end())), order));
}

CertificateDocument build_witness(const Polynomial& f, const std::vector<std::string>& variables,
                                  const PipelineConfig& cfg) {
  cfg.validate();
  if (variables.size() != f.nvars()) throw ArityError("variable list does not match the polynomial");
  CertificateDocument doc;
  doc.input.variables = variables;
  doc.input.f = f;
  doc.input.order = cfg.order.name();

  try {
    std::optional<QuasiHomogeneity> weights;
    if (std::string why = input_problem(f, cfg, weights); !why.empty()) {
      if (weights) {
        doc.input.weights = weights->weights;
        doc.input.weighted_degree = weights->degree;
      }
      doc.verdict = kInputRejected;
      doc.message = why;
      log_line(LogLevel::info, "input rejected: " + why);
      return doc;
    }
    doc.input.weights = weights->weights;
    doc.input.weighted_degree = weights->degree;
    const std::size_t n = f.nvars();

    SliceResult slice = generic_slice_search(f, cfg);
    const Polynomial& g = slice.g;
    doc.change = CoordinateRecord{new_variable_names(variables), slice.coefficients, slice.attempts, g,
                                  record(slice.restricted)};

    GroebnerBasis jgb = compute(jacobian_ideal(g), cfg, true);
    if (!is_zero_dimensional(jgb)) throw InternalInconsistency("isolatedness lost under a linear change");

    DerivationTuple candidate = build_candidate_tuple(g, *weights);
    CandidateRecord cand{tuple_matrix(candidate), {}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Polynomial diff = candidate.asymmetry(i, j);
        auto lift = lift_membership(diff, jgb);
        if (!lift) throw InternalInconsistency("candidate difference is not in J(g)");
        cand.differences.push_back({i, j, diff, *lift});
      }
    doc.candidate = std::move(cand);
    log_line(LogLevel::info, "candidate tuple built; differences lie in J(g)");

    SymmetrizeResult sym = symmetrize(candidate, g, &jgb);
    std::vector<AdjustmentRecord> ledger;
    for (const auto& a : sym.ledger) ledger.push_back({a.target, a.k, a.l, a.coeff});
    doc.adjustments = std::move(ledger);
    doc.symmetric_tuple = tuple_matrix(sym.tuple);
    log_line(LogLevel::info, "symmetrized with " + std::to_string(sym.ledger.size()) + " adjustment(s)");

    DiffOp2 op = lift_to_diff2(sym.tuple, g, &jgb);
    std::vector<OperatorTerm> terms;
    for (const auto& [alpha, c] : op.coefficients()) terms.push_back({alpha, c});
    doc.lifted_operator = std::move(terms);

    GroebnerBasis j1 = compute(ji_ideal(g, 0), cfg, true);
    GroebnerBasis sq = compute(square_ideal(g, 0), cfg, false);
    Polynomial value = sym.tuple.entry(0, 0);
    Polynomial nf_j1 = normal_form(value, j1);
    Polynomial nf_sq = normal_form(value, sq);
    bool in_j1 = nf_j1.is_zero(), in_sq = nf_sq.is_zero();
    if (in_sq && !in_j1) throw InternalInconsistency("square ideal membership without J_1 membership");
    if (!is_zero_dimensional(j1)) throw InternalInconsistency("J_1 is not zero-dimensional for a generic slice");
    SaitoResult saito = saito_check(j1);
    if (in_j1) throw InternalInconsistency("d'_1(y_1) lies in J_1 although the slice is generic");

    doc.membership = MembershipTests{record(jgb), MembershipRecord{value, nf_j1, in_j1, record(j1)},
                                     MembershipRecord{value, nf_sq, in_sq, record(sq)},
                                     SaitoRecord{saito.jac_det, saito.normal_form, saito.member}};
    doc.verdict = kWitnessFound;
    doc.message = "d'_1(y_1) is not in J_1, so the lifted operator lies in Der^2(A) but not in der^2(A)";
    if (weights->homogeneous() && weights->degree == 2) doc.message += " (degree-2 input)";
    if (!weights->homogeneous()) doc.message += " (weighted-homogeneous input)";
    return doc;
  } catch (const ResourceExhausted& e) {
    CertificateDocument out;
    out.input = doc.input;
    out.verdict = kResourceExhausted;
    out.message = e.what();
    log_line(LogLevel::info, std::string("resource limit: ") + e.what());
    return out;
  }
}

bool VerificationReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerificationReport verify_certificate(const CertificateDocument& doc) {
  VerificationReport rep;
  auto check = [&](const std::string& name, const std::function<bool(std::string&)>& body) {
    VerificationCheck c{name, false, {}};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
    return rep.checks.back().passed;
  };

  bool structural = check("schema and verdict", [&](std::string& why) {
    if (doc.schema != kCertificateSchema) return (why = "unknown schema", false);
    if (doc.verdict != kWitnessFound) return (why = "verdict is " + doc.verdict + ", nothing to verify", false);
    if (!doc.change || !doc.candidate || !doc.adjustments || !doc.symmetric_tuple || !doc.lifted_operator ||
        !doc.membership)
      return (why = "a section is missing", false);
    return true;
  });
  if (!structural) return rep;

  const Polynomial& f = doc.input.f;
  const std::size_t n = f.nvars();
  const auto& ch = *doc.change;
  const Polynomial& g = ch.g;
  const auto& mt = *doc.membership;
  MonomialOrder order;
  QuasiHomogeneity weights{doc.input.weights, doc.input.weighted_degree};

  bool input_ok = check("input weights", [&](std::string& why) {
    order = parse_order(doc.input.order);
    if (n < 3) return (why = "fewer than 3 variables", false);
    auto q = quasi_homogeneous_weights(f);
    if (!q || *q != weights) return (why = "recorded weights do not match f", false);
    return true;
  });
  if (!input_ok) return rep;

  bool change_ok = check("coordinate change", [&](std::string& why) {
    if (ch.variables.size() != n || ch.slice.size() != n || g.nvars() != n) return (why = "size mismatch", false);
    if (ch.slice[0] == 0) return (why = "a_1 is zero", false);
    for (std::size_t j = 1; j < n; ++j)
      if (ch.slice[j] != 0 && weights.weights[j] != weights.weights[0]) return (why = "slice mixes weights", false);
    if (substitute_linear(f, LinearChange::slice(ch.slice)) != g) return (why = "g is not f after the change", false);
    return true;
  });
  if (!change_ok) return rep;

  auto record_ok = [&](const GroebnerRecord& r, const std::vector<Polynomial>& expected, bool need_cofactors,
                       std::string& why) {
    if (r.generators != expected) return (why = "generators differ from the expected ideal", false);
    if (need_cofactors && !r.cofactors) return (why = "cofactors missing", false);
    auto c = check_groebner_record(r.generators, r.basis, order, r.cofactors ? &*r.cofactors : nullptr);
    if (!c.generators_reduce_to_zero) return (why = "a generator does not reduce to zero", false);
    if (!c.s_pairs_reduce_to_zero) return (why = "an S-polynomial does not reduce to zero", false);
    if (!c.reduced) return (why = "basis is not reduced", false);
    if (c.cofactors_valid == std::optional<bool>(false)) return (why = "cofactors do not reproduce the basis", false);
    return true;
  };
  auto zero_dim = [&](const GroebnerRecord& r) {
    std::vector<bool> seen(n, false);
    for (const auto& b : r.basis) {
      ExponentVector lm = leading_monomial(b, order);
      if (lm.is_zero()) return true;
      int v = lm.pure_power_variable();
      if (v >= 0) seen[std::size_t(v)] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };

  check("slice restriction is isolated", [&](std::string& why) {
    if (!record_ok(ch.restricted_jacobian, restricted_ideal(g).generators(), true, why)) return false;
    if (!zero_dim(ch.restricted_jacobian)) return (why = "(y_1, g_2, ..., g_n) is not zero-dimensional", false);
    return true;
  });

  check("g has an isolated singularity", [&](std::string& why) {
    for (const Term& t : g.terms())
      if (t.exponent.degree() < 2) return (why = "g has a term of degree < 2", false);
    if (!record_ok(mt.jacobian, jacobian_gens(g), true, why)) return false;
    if (!zero_dim(mt.jacobian)) return (why = "J(g) is not zero-dimensional", false);
    return true;
  });

  const auto& cand = *doc.candidate;
  check("candidate tuple", [&](std::string& why) {
    if (tuple_matrix(build_candidate_tuple(g, weights)) != cand.tuple)
      return (why = "tuple is not A_{i1} times the Euler derivation", false);
    return true;
  });

  check("candidate differences lie in J(g)", [&](std::string& why) {
    DerivationTuple t = tuple_from(cand.tuple);
    std::vector<Polynomial> gi = jacobian_gens(g);
    std::size_t expected = n * (n - 1) / 2;
    if (cand.differences.size() != expected) return (why = "wrong number of difference records", false);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++idx) {
        const auto& d = cand.differences[idx];
        if (d.i != i || d.j != j) return (why = "difference records out of order", false);
        if (d.difference != t.asymmetry(i, j)) return (why = "recorded difference is wrong", false);
        if (d.coefficients.size() != n) return (why = "wrong number of coefficients", false);
        Polynomial sum(n);
        for (std::size_t l = 0; l < n; ++l) sum += d.coefficients[l] * gi[l];
        if (sum != d.difference) return (why = "coefficients do not reproduce the difference", false);
      }
    return true;
  });

  DerivationTuple sym = tuple_from(*doc.symmetric_tuple);
  check("adjustment ledger replay", [&](std::string& why) {
    AdjustmentLedger ledger;
    for (const auto& a : *doc.adjustments) {
      if (a.k == a.l) return (why = "Hamiltonian with equal indices", false);
      ledger.push_back({a.target, a.k, a.l, a.coeff});
    }
    if (replay_ledger(tuple_from(cand.tuple), ledger, g) != sym) return (why = "replay does not give the tuple", false);
    return true;
  });

  check("symmetric tuple", [&](std::string& why) {
    if (!sym.is_symmetric()) return (why = "d_i(y_j) != d_j(y_i) for some pair", false);
    for (std::size_t i = 0; i < n; ++i)
      if (!preservation_cofactor(sym[i], g)) return (why = "a component does not preserve (g)", false);
    return true;
  });

  check("lifted operator", [&](std::string& why) {
    DiffOp2 op(n);
    for (const auto& t : *doc.lifted_operator) {
      unsigned d = t.alpha.degree();
      if (d < 1 || d > 2) return (why = "coefficient of order other than 1 or 2", false);
      if (!op.coefficient(t.alpha).is_zero()) return (why = "repeated multi-index", false);
      op.set(t.alpha, t.coeff);
    }
    if (theta2_extract(op) != sym) return (why = "theta2 image differs from the symmetric tuple", false);
    Division d = divide(apply_diffop(op, g), std::vector<Polynomial>{g}, MonomialOrder::grevlex());
    if (!d.remainder.is_zero()) return (why = "D(g) is not in (g)", false);
    return true;
  });

  auto nonmember_ok = [&](const MembershipRecord& m, const std::vector<Polynomial>& gens, bool need_cofactors,
                          std::string& why) {
    if (!record_ok(m.ideal, gens, need_cofactors, why)) return false;
    if (m.value != sym.entry(0, 0)) return (why = "value is not d'_1(y_1)", false);
    Polynomial nf = normal_form(m.value, m.ideal.basis, order);
    if (nf != m.normal_form) return (why = "recorded normal form is wrong", false);
    if (nf.is_zero() || m.member) return (why = "value is a member", false);
    return true;
  };

  check("d'_1(y_1) not in J_1", [&](std::string& why) {
    return nonmember_ok(mt.ji, ji_ideal(g, 0).generators(), true, why);
  });

  check("d'_1(y_1) not in the square ideal", [&](std::string& why) {
    if (!nonmember_ok(mt.square, square_ideal(g, 0).generators(), false, why)) return false;
    for (const auto& s : mt.square.ideal.generators)
      if (!normal_form(s, mt.ji.ideal.basis, order).is_zero()) return (why = "square ideal is not inside J_1", false);
    return true;
  });

  check("Saito criterion", [&](std::string& why) {
    if (!zero_dim(mt.ji.ideal)) return (why = "J_1 is not zero-dimensional", false);
    if (jacobian_det(mt.ji.ideal.generators) != mt.saito.determinant) return (why = "determinant is wrong", false);
    Polynomial nf = normal_form(mt.saito.determinant, mt.ji.ideal.basis, order);
    if (nf != mt.saito.normal_form) return (why = "recorded normal form is wrong", false);
    if (nf.is_zero() || mt.saito.member) return (why = "determinant is a member", false);
    return true;
  });

  return rep;
}

}  // namespace nakai
