// Coefficient-generic Buchberger core shared by the exact engine and the
// modular pre-filter. Internal header.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "nakai/errors.hpp"
#include "nakai/monomial_order.hpp"
#include "nakai/polynomial.hpp"

namespace nakai::detail {

template <std::uint32_t P>
struct Zp {
  std::uint32_t v = 0;

  Zp() = default;
  explicit Zp(int x) : v(std::uint32_t(x)) {}
  static Zp raw(std::uint32_t x) {
    Zp z;
    z.v = x;
    return z;
  }
  friend Zp operator+(Zp a, Zp b) {
    std::uint32_t s = a.v + b.v;
    return raw(s >= P ? s - P : s);
  }
  friend Zp operator-(Zp a, Zp b) { return raw(a.v >= b.v ? a.v - b.v : a.v + P - b.v); }
  Zp operator-() const { return raw(v == 0 ? 0 : P - v); }
  friend Zp operator*(Zp a, Zp b) { return raw(std::uint32_t(std::uint64_t(a.v) * b.v % P)); }
  Zp inverse() const {
    Zp r = raw(1), b = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1, b = b * b)
      if (e & 1) r = r * b;
    return r;
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  friend bool operator==(Zp, Zp) = default;
};

inline bool is_zero_coeff(const Rational& c) { return sgn(c) == 0; }
template <std::uint32_t P>
bool is_zero_coeff(const Zp<P>& c) { return c.v == 0; }

struct BadReduction {};  // a denominator vanished mod p

template <std::uint32_t P>
Zp<P> zp_from(const Rational& q) {
  mpz_class num = q.get_num() % P, den = q.get_den() % P;
  if (num < 0) num += P;
  if (den == 0) throw BadReduction{};
  return Zp<P>::raw(std::uint32_t(num.get_ui())) / Zp<P>::raw(std::uint32_t(den.get_ui()));
}

template <class C>
struct OTerm {
  ExponentVector e;
  C c;
};
template <class C>
using OPoly = std::vector<OTerm<C>>;

inline ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
  std::array<unsigned, kMaxVars> tmp{};
  for (std::size_t i = 0; i < a.size(); ++i) tmp[i] = a[i] + b[i];
  return ExponentVector(std::span<const unsigned>(tmp.data(), a.size()));
}

template <class C>
class Engine {
 public:
  struct Step {
    std::size_t elem;
    C coeff;
    ExponentVector shift;
  };
  struct Elem {
    OPoly<C> poly;
    std::vector<Polynomial> cof;  // only with tracking
    bool active = true;
  };

  Engine(const MonomialOrder& order, std::size_t nvars, std::size_t max_pairs, std::size_t max_terms, bool track,
         std::size_t ngens)
      : order_(order), n_(nvars), max_pairs_(max_pairs), max_terms_(max_terms), track_(track), ngens_(ngens) {}

  const MonomialOrder& order() const { return order_; }
  std::vector<Elem>& elems() { return elems_; }
  const std::vector<Elem>& elems() const { return elems_; }

  template <class Convert>
  OPoly<C> convert(const Polynomial& p, Convert&& conv) const {
    OPoly<C> out;
    out.reserve(p.term_count());
    for (const Term& t : p.terms()) {
      C c = conv(t.coeff);
      if (!is_zero_coeff(c)) out.push_back({t.exponent, std::move(c)});
    }
    sort_terms(out);
    return out;
  }

  void sort_terms(OPoly<C>& p) const {
    std::sort(p.begin(), p.end(), [&](const OTerm<C>& a, const OTerm<C>& b) { return order_.greater(a.e, b.e); });
  }

  /// p - c * x^m * g
  OPoly<C> sub_scaled(const OPoly<C>& p, const C& c, const ExponentVector& m, const OPoly<C>& g) const {
    OPoly<C> out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      ExponentVector ge = exp_add(g[j].e, m);
      if (i == p.size()) {
        out.push_back({ge, -(c * g[j].c)});
        ++j;
        continue;
      }
      auto cmp = order_.compare(p[i].e, ge);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(p[i++]);
      } else if (cmp == std::strong_ordering::less) {
        out.push_back({ge, -(c * g[j].c)});
        ++j;
      } else {
        C v = p[i].c - c * g[j].c;
        if (!is_zero_coeff(v)) out.push_back({ge, std::move(v)});
        ++i;
        ++j;
      }
    }
    if (out.size() > max_terms_) throw ResourceExhausted("intermediate polynomial exceeds the term limit");
    return out;
  }

  /// Index of the first eligible reducer whose leading monomial divides e.
  std::ptrdiff_t find_reducer(const ExponentVector& e, std::ptrdiff_t skip, const std::vector<std::size_t>& pool) const {
    for (std::size_t k : pool) {
      if (std::ptrdiff_t(k) == skip) continue;
      if (elems_[k].poly.front().e.divides(e)) return std::ptrdiff_t(k);
    }
    return -1;
  }

  /// Full reduction of p by the elements in `pool`, recording the steps.
  OPoly<C> reduce(OPoly<C> p, const std::vector<std::size_t>& pool, std::vector<Step>* steps,
                  std::ptrdiff_t skip = -1) const {
    OPoly<C> rem;
    while (!p.empty()) {
      const OTerm<C>& lt = p.front();
      std::ptrdiff_t k = find_reducer(lt.e, skip, pool);
      if (k < 0) {
        rem.push_back(std::move(p.front()));
        p.erase(p.begin());
        continue;
      }
      const OPoly<C>& g = elems_[std::size_t(k)].poly;
      C c = lt.c / g.front().c;
      ExponentVector m = lt.e - g.front().e;
      if (steps) steps->push_back({std::size_t(k), c, m});
      p = sub_scaled(p, c, m, g);
    }
    return rem;
  }

  std::vector<std::size_t> active_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].active) out.push_back(k);
    return out;
  }

  /// Cofactor of sum c*x^m*elem over the steps.
  std::vector<Polynomial> step_cofactors(const std::vector<Step>& steps) const
    requires std::is_same_v<C, Rational>
  {
    std::vector<Polynomial> out(ngens_, Polynomial(n_));
    for (const Step& s : steps)
      for (std::size_t i = 0; i < ngens_; ++i)
        if (!elems_[s.elem].cof[i].is_zero()) out[i] += elems_[s.elem].cof[i].times_term(s.shift, s.coeff);
    return out;
  }

  /// Divide out the content: primitive integral with positive leading
  /// coefficient over Q, monic over Z/p. Returns the divisor.
  C normalize(OPoly<C>& p) const {
    C d;
    if constexpr (std::is_same_v<C, Rational>) {
      mpz_class num = 0, den = 1;
      for (const auto& t : p) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
      }
      d = Rational(num, den);
      d.canonicalize();
      if (sgn(p.front().c) < 0) d = -d;
    } else {
      d = p.front().c;
    }
    for (auto& t : p) t.c = t.c / d;
    return d;
  }

  /// Adds an element (already reduced and normalized) and updates the pairs
  /// with the Gebauer-Moeller criteria.
  void add(OPoly<C> h, std::vector<Polynomial> cof) {
    std::size_t hi = elems_.size();
    elems_.push_back({std::move(h), std::move(cof), true});
    const ExponentVector& lh = elems_[hi].poly.front().e;

    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < hi; ++k)
      if (elems_[k].active) cand.push_back(k);

    // Chain criterion among the new pairs.
    std::vector<std::size_t> kept;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      std::size_t g1 = cand[idx];
      const ExponentVector& l1 = elems_[g1].poly.front().e;
      ExponentVector lcm1 = ExponentVector::lcm(lh, l1);
      bool keep = ExponentVector::coprime(lh, l1);
      if (!keep) {
        keep = true;
        auto dominated = [&](std::size_t g2) {
          return ExponentVector::lcm(lh, elems_[g2].poly.front().e).divides(lcm1);
        };
        for (std::size_t r = idx + 1; r < cand.size() && keep; ++r)
          if (dominated(cand[r])) keep = false;
        for (std::size_t r : kept)
          if (keep && dominated(r)) keep = false;
      }
      if (keep) kept.push_back(g1);
    }
    // Drop old pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const ExponentVector& la = elems_[it->i].poly.front().e;
      const ExponentVector& lb = elems_[it->j].poly.front().e;
      if (lh.divides(it->lcm) && ExponentVector::lcm(la, lh) != it->lcm && ExponentVector::lcm(lh, lb) != it->lcm)
        it = pairs_.erase(it);
      else
        ++it;
    }
    // Product criterion on the survivors.
    for (std::size_t g : kept) {
      const ExponentVector& lg = elems_[g].poly.front().e;
      if (ExponentVector::coprime(lh, lg)) continue;
      pairs_.insert(Pair{g, hi, ExponentVector::lcm(lg, lh)});
    }
    for (std::size_t k = 0; k < hi; ++k)
      if (elems_[k].active && lh.divides(elems_[k].poly.front().e)) elems_[k].active = false;
  }

  /// Runs the pair loop to completion. Returns false when a unit was found.
  bool run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++processed > max_pairs_) throw ResourceExhausted("S-pair limit exceeded");
      const Elem& a = elems_[pr.i];
      const Elem& b = elems_[pr.j];
      ExponentVector ma = pr.lcm - a.poly.front().e;
      ExponentVector mb = pr.lcm - b.poly.front().e;
      C ca = C(a.poly.front().c);
      C cb = C(b.poly.front().c);
      // S = (1/ca) x^ma a - (1/cb) x^mb b
      OPoly<C> left;
      left.reserve(a.poly.size());
      for (const auto& t : a.poly) left.push_back({exp_add(t.e, ma), t.c / ca});
      C inv_b = C(1) / cb;
      OPoly<C> s = sub_scaled(left, inv_b, mb, b.poly);
      std::vector<Step> steps;
      std::vector<Step>* sp = track_ ? &steps : nullptr;
      OPoly<C> h = reduce(std::move(s), active_indices(), sp);
      if (h.empty()) continue;
      std::vector<Polynomial> cof;
      if constexpr (std::is_same_v<C, Rational>) {
        if (track_) {
          cof.assign(ngens_, Polynomial(n_));
          Rational inv_a = Rational(1) / ca;
          for (std::size_t g = 0; g < ngens_; ++g) {
            cof[g] = a.cof[g].times_term(ma, inv_a) - b.cof[g].times_term(mb, inv_b);
          }
          auto red = step_cofactors(steps);
          for (std::size_t g = 0; g < ngens_; ++g) cof[g] -= red[g];
        }
      }
      finish_new(std::move(h), std::move(cof));
      if (unit_found_) return false;
    }
    return true;
  }

  /// Normalizes and adds; detects the unit ideal.
  void finish_new(OPoly<C> h, std::vector<Polynomial> cof) {
    C d = normalize(h);
    if constexpr (std::is_same_v<C, Rational>) {
      if (track_) {
        Rational inv = Rational(1) / d;
        for (auto& q : cof) q *= inv;
      }
    }
    bool unit = h.front().e.is_zero();
    add(std::move(h), std::move(cof));
    if (unit) {
      unit_found_ = true;
      pairs_.clear();
    }
  }

  bool unit_found() const { return unit_found_; }

  /// Minimal active elements, tail-reduced and monic, sorted by increasing
  /// leading monomial.
  std::vector<std::size_t> interreduce() {
    std::vector<std::size_t> act = active_indices();
    if (unit_found_) {
      std::size_t u = elems_.size() - 1;
      for (std::size_t k : act) elems_[k].active = (k == u);
      act = {u};
    }
    for (std::size_t k : act) {
      Elem& e = elems_[k];
      OTerm<C> lead = e.poly.front();
      OPoly<C> tail(e.poly.begin() + 1, e.poly.end());
      std::vector<Step> steps;
      OPoly<C> red = reduce(std::move(tail), act, track_ ? &steps : nullptr, std::ptrdiff_t(k));
      if constexpr (std::is_same_v<C, Rational>) {
        if (track_ && !steps.empty()) {
          auto sub = step_cofactors(steps);
          for (std::size_t g = 0; g < ngens_; ++g) e.cof[g] -= sub[g];
        }
      }
      C inv = C(1) / lead.c;
      e.poly.clear();
      e.poly.push_back({lead.e, C(1)});
      for (auto& t : red) e.poly.push_back({t.e, t.c * inv});
      if constexpr (std::is_same_v<C, Rational>) {
        if (track_)
          for (auto& q : e.cof) q *= inv;
      }
    }
    std::sort(act.begin(), act.end(), [&](std::size_t a, std::size_t b) {
      return order_.greater(elems_[b].poly.front().e, elems_[a].poly.front().e);
    });
    return act;
  }

 private:
  struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
  };
  struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
      unsigned da = a.lcm.degree(), db = b.lcm.degree();
      if (da != db) return da < db;
      if (a.lcm != b.lcm) return a.lcm < b.lcm;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  MonomialOrder order_;
  std::size_t n_;
  std::size_t max_pairs_;
  std::size_t max_terms_;
  bool track_;
  std::size_t ngens_;
  std::vector<Elem> elems_;
  std::set<Pair, PairLess> pairs_;
  bool unit_found_ = false;
};

}  // namespace nakai::detail
