#include "nakai/derivations.hpp"

#include "nakai/errors.hpp"
#include "nakai/symdet.hpp"

namespace nakai {

namespace {

void require_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw ArityError(what);
}

ExponentVector pair_index(std::size_t n, std::size_t i, std::size_t j) {
  ExponentVector e(n);
  e.set(i, e[i] + 1);
  e.set(j, e[j] + 1);
  return e;
}

GroebnerBasis tracked_jacobian_basis(const Polynomial& f, const GroebnerBasis* given) {
  if (given) {
    if (!given->has_cofactors()) throw DomainError("Jacobian basis must carry cofactors");
    if (given->source().generators() != jacobian_ideal(f).generators())
      throw DomainError("basis does not belong to the Jacobian ideal of f");
    return *given;
  }
  GroebnerOptions opt;
  opt.track_cofactors = true;
  return buchberger(jacobian_ideal(f), MonomialOrder::grevlex(), opt);
}

}  // namespace

Derivation1::Derivation1(std::vector<Polynomial> images) : images_(std::move(images)) {
  for (const auto& p : images_) require_arity(p.nvars(), images_.size(), "derivation needs one image per variable");
}

Derivation1 Derivation1::zero(std::size_t nvars) { return Derivation1(std::vector<Polynomial>(nvars, Polynomial(nvars))); }

Derivation1& Derivation1::operator+=(const Derivation1& other) {
  require_arity(nvars(), other.nvars(), "derivations in different rings");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += other.images_[i];
  return *this;
}

Derivation1& Derivation1::operator-=(const Derivation1& other) {
  require_arity(nvars(), other.nvars(), "derivations in different rings");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= other.images_[i];
  return *this;
}

Derivation1 operator*(const Polynomial& a, const Derivation1& d) {
  require_arity(a.nvars(), d.nvars(), "scalar and derivation in different rings");
  std::vector<Polynomial> out;
  out.reserve(d.nvars());
  for (const auto& p : d.images()) out.push_back(a * p);
  return Derivation1(std::move(out));
}

Derivation1 euler_derivation(std::size_t nvars) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < nvars; ++i) images.push_back(Polynomial::variable(nvars, i));
  return Derivation1(std::move(images));
}

Derivation1 weighted_euler_derivation(std::span<const unsigned> weights) {
  const std::size_t n = weights.size();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i) * Rational(weights[i]));
  return Derivation1(std::move(images));
}

Derivation1 hamiltonian(const Polynomial& f, std::size_t i, std::size_t j) {
  const std::size_t n = f.nvars();
  if (i >= n || j >= n) throw DomainError("Hamiltonian index out of range");
  if (i == j) throw DomainError("Hamiltonian D_ii is the zero derivation");
  Derivation1 d = Derivation1::zero(n);
  std::vector<Polynomial> images = d.images();
  images[i] = -partial(f, j);
  images[j] = partial(f, i);
  return Derivation1(std::move(images));
}

Polynomial apply_derivation(const Derivation1& d, const Polynomial& p) {
  require_arity(d.nvars(), p.nvars(), "derivation and polynomial in different rings");
  Polynomial out(p.nvars());
  for (std::size_t i = 0; i < d.nvars(); ++i)
    if (!d.image(i).is_zero()) out += partial(p, i) * d.image(i);
  return out;
}

Derivation1 scale_and_add(const Derivation1& d1, const Polynomial& a, const Derivation1& d2) { return d1 + a * d2; }

std::optional<Polynomial> preservation_cofactor(const Derivation1& d, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("f must be nonzero");
  Polynomial image = apply_derivation(d, f);
  std::vector<Polynomial> divisor{f};
  Division div = divide(image, divisor, MonomialOrder::grevlex());
  if (!div.remainder.is_zero()) return std::nullopt;
  return div.quotients.front();
}

DerivationTuple::DerivationTuple(std::vector<Derivation1> components) : components_(std::move(components)) {
  for (const auto& d : components_) require_arity(d.nvars(), components_.size(), "tuple needs n derivations in n variables");
}

Polynomial DerivationTuple::asymmetry(std::size_t i, std::size_t j) const { return entry(i, j) - entry(j, i); }

bool DerivationTuple::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (entry(i, j) != entry(j, i)) return false;
  return true;
}

Polynomial DiffOp2::coefficient(const ExponentVector& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Polynomial(n_) : it->second;
}

void DiffOp2::set(const ExponentVector& alpha, Polynomial c) {
  require_arity(alpha.size(), n_, "multi-index has the wrong length");
  require_arity(c.nvars(), n_, "coefficient in a different ring");
  if (alpha.degree() > 2) throw DomainError("order exceeds 2");
  if (c.is_zero())
    coeffs_.erase(alpha);
  else
    coeffs_[alpha] = std::move(c);
}

std::optional<unsigned> DiffOp2::order() const {
  std::optional<unsigned> best;
  for (const auto& [alpha, c] : coeffs_)
    if (!best || alpha.degree() > *best) best = alpha.degree();
  return best;
}

Polynomial apply_diffop(const DiffOp2& d, const Polynomial& p) {
  require_arity(d.nvars(), p.nvars(), "operator and polynomial in different rings");
  Polynomial out(p.nvars());
  for (const auto& [alpha, c] : d.coefficients()) out += c * higher_partial(p, alpha);
  return out;
}

DiffOp2 shift(const DiffOp2& d, const ExponentVector& beta) {
  require_arity(beta.size(), d.nvars(), "multi-index has the wrong length");
  if (beta.degree() > 2) throw DomainError("shift by more than the operator order");
  DiffOp2 out(d.nvars());
  for (const auto& [gamma, c] : d.coefficients())
    if (beta.divides(gamma)) out.set(gamma - beta, c);
  return out;
}

DerivationTuple theta2_extract(const DiffOp2& d) {
  const std::size_t n = d.nvars();
  std::vector<Derivation1> comps;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(d.coefficient(pair_index(n, i, j)));
    comps.emplace_back(std::move(images));
  }
  return DerivationTuple(std::move(comps));
}

DiffOp2 compose2(const Derivation1& d1, const Derivation1& d2) {
  require_arity(d1.nvars(), d2.nvars(), "derivations in different rings");
  const std::size_t n = d1.nvars();
  DiffOp2 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& a = d1.image(i);
    out.set(pair_index(n, i, i), Rational(2) * (a * d2.image(i)));
    for (std::size_t j = i + 1; j < n; ++j)
      out.set(pair_index(n, i, j), a * d2.image(j) + d1.image(j) * d2.image(i));
    out.set(ExponentVector::unit(n, i), apply_derivation(d1, d2.image(i)));
  }
  return out;
}

bool verify_order2_identity(const DiffOp2& d, std::span<const std::array<Polynomial, 3>> triples) {
  if (!d.coefficient(ExponentVector(d.nvars())).is_zero()) throw DomainError("operator has an order-zero term");
  for (const auto& t : triples) {
    Polynomial lhs = apply_diffop(d, t[0] * t[1] * t[2]);
    Polynomial rhs(d.nvars());
    for (unsigned mask = 1; mask < 7; ++mask) {
      Polynomial taken = Polynomial::constant(d.nvars(), 1);
      Polynomial rest = Polynomial::constant(d.nvars(), 1);
      for (unsigned k = 0; k < 3; ++k) (mask >> k & 1 ? taken : rest) *= t[k];
      Polynomial term = taken * apply_diffop(d, rest);
      if (__builtin_popcount(mask) == 1)
        rhs += term;
      else
        rhs -= term;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

DerivationTuple build_candidate_tuple(const Polynomial& f) {
  auto q = quasi_homogeneous_weights(f);
  if (!q) throw DomainError("f is not quasi-homogeneous");
  if (!is_isolated_quasi_homogeneous(f)) throw DomainError("f does not define an isolated singularity");
  return build_candidate_tuple(f, *q);
}

DerivationTuple build_candidate_tuple(const Polynomial& f, const QuasiHomogeneity& weights) {
  require_arity(weights.weights.size(), f.nvars(), "one weight per variable is required");
  PolyMatrix h = hessian(f);
  Derivation1 e = weighted_euler_derivation(weights.weights);
  std::vector<Derivation1> comps;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    Derivation1 d = cofactor(h, i, 0) * e;
    if (!preservation_cofactor(d, f)) throw InternalInconsistency("candidate component does not preserve (f)");
    comps.push_back(std::move(d));
  }
  return DerivationTuple(std::move(comps));
}

DerivationTuple replay_ledger(const DerivationTuple& start, const AdjustmentLedger& ledger, const Polynomial& f) {
  require_arity(start.nvars(), f.nvars(), "tuple and f in different rings");
  DerivationTuple t = start;
  for (const auto& a : ledger) {
    if (a.target >= t.size()) throw DomainError("ledger target out of range");
    t[a.target] = scale_and_add(t[a.target], a.coeff, hamiltonian(f, a.k, a.l));
  }
  return t;
}

SymmetrizeResult symmetrize(const DerivationTuple& t, const Polynomial& f, const GroebnerBasis* jacobian_gb) {
  const std::size_t n = t.nvars();
  require_arity(n, f.nvars(), "tuple and f in different rings");
  SymmetrizeResult out{t, {}};
  if (t.is_symmetric()) return out;
  GroebnerBasis gb = tracked_jacobian_basis(f, jacobian_gb);
  const Rational half(1, 2);

  auto adjust = [&](std::size_t target, std::size_t k, std::size_t l, const Polynomial& c) {
    if (c.is_zero()) return;
    out.ledger.push_back({target, k, l, c});
    out.tuple[target] = scale_and_add(out.tuple[target], c, hamiltonian(f, k, l));
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Polynomial delta = out.tuple.asymmetry(i, j);
      if (delta.is_zero()) continue;
      auto lift = lift_membership(delta, gb);
      if (!lift) throw DomainError("tuple difference is not in the Jacobian ideal");
      const auto& a = *lift;
      for (std::size_t l = 0; l < n; ++l) {
        const Polynomial& c = a[l];
        if (c.is_zero()) continue;
        if (l == i) {
          adjust(i, i, j, -c);
        } else if (l == j) {
          adjust(j, i, j, -c);
        } else if (l > j) {
          adjust(i, j, l, c);
        } else if (l > i) {
          adjust(j, i, l, -c);
        } else {
          // l < i: spread the component over the three pairs among l, i, j.
          Polynomial h = half * c;
          adjust(l, i, j, -h);
          adjust(i, l, j, -h);
          adjust(j, l, i, h);
        }
      }
      if (!out.tuple.asymmetry(i, j).is_zero())
        throw InternalInconsistency("symmetrization left a nonzero difference");
    }
  }

  if (!out.tuple.is_symmetric()) throw InternalInconsistency("symmetrized tuple is not symmetric");
  if (replay_ledger(t, out.ledger, f) != out.tuple) throw InternalInconsistency("ledger replay mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    bool before = preservation_cofactor(t[k], f).has_value();
    bool after = preservation_cofactor(out.tuple[k], f).has_value();
    if (before != after) throw InternalInconsistency("symmetrization changed ideal preservation");
  }
  return out;
}

DiffOp2 lift_to_diff2(const DerivationTuple& t, const Polynomial& f, const GroebnerBasis* jacobian_gb) {
  const std::size_t n = t.nvars();
  require_arity(n, f.nvars(), "tuple and f in different rings");
  if (!t.is_symmetric()) throw DomainError("tuple is not symmetric");
  DiffOp2 d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) d.set(pair_index(n, i, j), t.entry(i, j));
  Polynomial second = apply_diffop(d, f);
  if (!second.is_zero()) {
    GroebnerBasis gb = tracked_jacobian_basis(f, jacobian_gb);
    auto lift = lift_membership(-second, gb);
    if (!lift) throw InternalInconsistency("second-order part of the lift is not in the Jacobian ideal");
    for (std::size_t l = 0; l < n; ++l) d.set(ExponentVector::unit(n, l), (*lift)[l]);
  }
  if (!apply_diffop(d, f).is_zero()) throw InternalInconsistency("lifted operator does not annihilate f");
  if (theta2_extract(d) != t) throw InternalInconsistency("lifted operator has the wrong theta2 image");
  return d;
}

Ideal ji_ideal(const Polynomial& f, std::size_t i) {
  const std::size_t n = f.nvars();
  if (i >= n) throw DomainError("index out of range");
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < n; ++k) gens.push_back(k == i ? Polynomial::variable(n, i).pow(2) : partial(f, k));
  return Ideal(std::move(gens));
}

Ideal square_ideal(const Polynomial& f, std::size_t i) {
  const std::size_t n = f.nvars();
  if (i >= n) throw DomainError("index out of range");
  std::vector<Polynomial> base;
  for (std::size_t k = 0; k < n; ++k) base.push_back(k == i ? Polynomial::variable(n, i) : partial(f, k));
  std::vector<Polynomial> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) gens.push_back(base[a] * base[b]);
  return Ideal(std::move(gens));
}

NecessaryConditionReport necessary_condition_test(const DerivationTuple& t, const Polynomial& f, std::size_t i,
                                                  const MonomialOrder& order) {
  require_arity(t.nvars(), f.nvars(), "tuple and f in different rings");
  Polynomial value = t.entry(i, i);
  Polynomial nf_ji = normal_form(value, buchberger(ji_ideal(f, i), order));
  Polynomial nf_sq = normal_form(value, buchberger(square_ideal(f, i), order));
  NecessaryConditionReport r{value, nf_ji.is_zero(), nf_sq.is_zero(), nf_ji, nf_sq};
  if (r.in_square && !r.in_ji) throw InternalInconsistency("square ideal membership without J_i membership");
  return r;
}

}  // namespace nakai
