#include <gtest/gtest.h>

#include "nakai/errors.hpp"
#include "nakai/groebner.hpp"
#include "nakai/linear_change.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace nakai;
using namespace nakai::testing;

namespace {

std::vector<Polynomial> Ps(std::initializer_list<const char*> texts, const std::vector<std::string>& vars = kXYZ) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(t, vars));
  return out;
}

GroebnerBasis gb_of(std::initializer_list<const char*> texts, const std::vector<std::string>& vars = kXYZ,
                    const MonomialOrder& order = MonomialOrder::grevlex(), bool track = false) {
  GroebnerOptions opt;
  opt.track_cofactors = track;
  return buchberger(Ideal(Ps(texts, vars)), order, opt);
}

void expect_sound_lift(const Polynomial& p, const std::vector<Polynomial>& gens, const std::vector<Polynomial>& q) {
  ASSERT_EQ(q.size(), gens.size());
  Polynomial sum(p.nvars());
  for (std::size_t i = 0; i < q.size(); ++i) sum += q[i] * gens[i];
  EXPECT_EQ(sum, p);
}

// Homogeneous ideal with a zero-dimensional Jacobian-type shape plus noise.
std::vector<Polynomial> random_homogeneous_ideal(Gen& g, std::size_t n) {
  std::vector<Polynomial> gens;
  int count = g.integer(1, int(n) + 1);
  for (int k = 0; k < count; ++k) {
    Polynomial h = g.homogeneous(n, unsigned(g.integer(1, 3)), g.integer(1, 3), 3);
    if (h.is_zero()) h = Polynomial::variable(n, std::size_t(g.integer(0, int(n) - 1)));
    gens.push_back(h);
  }
  return gens;
}

}  // namespace

TEST(Ideal, RejectsEmptyAndMixedArity) {
  EXPECT_THROW(Ideal({}), DomainError);
  EXPECT_THROW(Ideal({P("x", kXY), P("x")}), ArityError);
}

TEST(Buchberger, MonomialIdealIsItsOwnBasis) {
  auto gb = gb_of({"x^2", "y^2"}, kXY);
  EXPECT_EQ(gb.basis(), Ps({"y^2", "x^2"}, kXY));
}

TEST(Buchberger, LexExample) {
  auto gb = gb_of({"x - y", "y^2"}, kXY, MonomialOrder::lex());
  ASSERT_EQ(gb.basis().size(), 2u);
  EXPECT_EQ(gb.basis()[0], P("y^2", kXY));
  EXPECT_EQ(gb.basis()[1], P("x - y", kXY));
}

TEST(Buchberger, FermatJacobianNormalizes) {
  auto gb = buchberger(jacobian_ideal(P("x^3 + y^3 + z^3")));
  EXPECT_EQ(gb.basis(), Ps({"z^2", "y^2", "x^2"}));
}

TEST(Buchberger, InvariantsHold) {
  auto gens = Ps({"x^2*y + y^2*z", "x*z^2 - y^3", "x^3 - 2*y*z^2"});
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::grlex()}) {
    auto gb = buchberger(Ideal(gens), order);
    auto check = check_groebner_record(gens, gb.basis(), order);
    EXPECT_TRUE(check.ok()) << order.name();
  }
}

TEST(Buchberger, UnitIdeal) {
  auto gb = gb_of({"x*y - 1", "x"}, kXY, MonomialOrder::grevlex(), true);
  EXPECT_TRUE(gb.is_unit());
  ASSERT_EQ(gb.cofactors().size(), 1u);
  auto q = lift_membership(P("1", kXY), gb);
  ASSERT_TRUE(q);
  expect_sound_lift(P("1", kXY), gb.source().generators(), *q);
}

TEST(Buchberger, ZeroGeneratorsIgnored) {
  auto gb = gb_of({"0", "x"}, kXY);
  EXPECT_EQ(gb.basis(), Ps({"x"}, kXY));
  EXPECT_TRUE(gb_of({"0"}, kXY).basis().empty());
}

TEST(Buchberger, Idempotent) {
  Gen g(7);
  for (int trial = 0; trial < 15; ++trial) {
    auto gens = random_homogeneous_ideal(g, 3);
    auto gb = buchberger(Ideal(gens));
    if (gb.basis().empty()) continue;
    auto again = buchberger(Ideal(gb.basis()));
    EXPECT_EQ(again.basis(), gb.basis());
  }
}

TEST(Buchberger, CofactorsExpressBasis) {
  auto gens = Ps({"x^2*y + y^2*z + z^2*x", "x*y*z - z^3", "y^3 + x^2*z"});
  GroebnerOptions opt;
  opt.track_cofactors = true;
  auto gb = buchberger(Ideal(gens), MonomialOrder::grevlex(), opt);
  auto check = check_groebner_record(gens, gb.basis(), gb.order(), &gb.cofactors());
  EXPECT_TRUE(check.ok());
  EXPECT_EQ(check.cofactors_valid, std::optional<bool>(true));
}

TEST(Buchberger, ResourceCap) {
  GroebnerOptions opt;
  opt.max_pairs = 1;
  auto gens = Ps({"x^2*y + y^2*z + z^2*x", "x*y*z - z^3", "y^3 + x^2*z"});
  EXPECT_THROW(buchberger(Ideal(gens), MonomialOrder::grevlex(), opt), ResourceExhausted);
  opt.max_pairs = 100000;
  opt.max_terms = 2;
  EXPECT_THROW(buchberger(Ideal(gens), MonomialOrder::grevlex(), opt), ResourceExhausted);
}

TEST(Buchberger, PriorityLengthMustMatch) {
  EXPECT_THROW(buchberger(Ideal(Ps({"x"})), MonomialOrder(OrderKind::lex, {1, 0})), ArityError);
}

TEST(NormalForm, MonomialNonMember) {
  auto gb = gb_of({"x^2", "y^2", "z^2"});
  EXPECT_EQ(normal_form(P("36*x*y*z"), gb), P("36*x*y*z"));
  EXPECT_TRUE(normal_form(P("x^2*y - 5*z^3"), gb).is_zero());
}

TEST(NormalForm, GeneratorsReduceToZero) {
  auto gens = Ps({"x^2*y + y^2*z + z^2*x", "x*y*z - z^3"});
  auto gb = buchberger(Ideal(gens));
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
}

TEST(NormalForm, CofactorA11InI1) {
  // f = x^2 y + y^2 z + z^2 x; I_1 = (x, f_2, f_3), A_11 = 4(xz - y^2).
  auto gb = gb_of({"x", "2*y*z + x^2", "2*z*x + y^2"});
  EXPECT_TRUE(normal_form(P("4*(x*z - y^2)"), gb).is_zero());
}

TEST(NormalForm, IsFullyReducedAndUnique) {
  auto gb = gb_of({"x^2 - y*z", "y^2 - x*z"});
  Polynomial p = P("x^3*y + 2*x*y^2*z - z^4 + x*y");
  Polynomial r = normal_form(p, gb);
  for (const auto& t : r.terms())
    for (const auto& lm : gb.leading_monomials()) EXPECT_FALSE(lm.divides(t.exponent));
  // Adding an ideal element does not change the remainder.
  Polynomial shifted = p + P("(x + z^2)*(x^2 - y*z) - 3*y*(y^2 - x*z)");
  EXPECT_EQ(normal_form(shifted, gb), r);
}

TEST(Divide, ReproducesInput) {
  auto divs = Ps({"x*y - 1", "y^2 - 1"}, kXY);
  Polynomial p = P("x^2*y + x*y^2 + y^2", kXY);
  Division d = divide(p, divs, MonomialOrder::lex());
  Polynomial sum = d.remainder;
  for (std::size_t k = 0; k < divs.size(); ++k) sum += d.quotients[k] * divs[k];
  EXPECT_EQ(sum, p);
  for (const auto& t : d.remainder.terms()) {
    EXPECT_FALSE(leading_monomial(divs[0], MonomialOrder::lex()).divides(t.exponent));
    EXPECT_FALSE(leading_monomial(divs[1], MonomialOrder::lex()).divides(t.exponent));
  }
}

TEST(Lift, EulerRelation) {
  Polynomial f = P("x^2*y + y^2*z + z^2*x");
  Ideal j = jacobian_ideal(f);
  auto q = lift_membership(f, j);
  ASSERT_TRUE(q);
  expect_sound_lift(f, j.generators(), *q);
  // Degree-0 cofactors are forced to be x_i / 3 modulo syzygies; here the
  // Jacobian entries are independent in degree 2, so the lift is exact.
  EXPECT_EQ((*q)[0], P("1/3*x"));
  EXPECT_EQ((*q)[1], P("1/3*y"));
  EXPECT_EQ((*q)[2], P("1/3*z"));
}

TEST(Lift, GeneratorLiftsAndNonMemberIsRejected) {
  auto gens = Ps({"x^2 + y*z", "y^2 - x*z", "z^3"});
  Ideal ideal(gens);
  auto q = lift_membership(gens[0], ideal);
  ASSERT_TRUE(q);
  expect_sound_lift(gens[0], gens, *q);
  EXPECT_FALSE(lift_membership(P("x"), ideal));
}

TEST(Lift, NeedsTracking) {
  auto gb = gb_of({"x"}, kXY);
  EXPECT_THROW(lift_membership(P("x", kXY), gb), DomainError);
}

TEST(ZeroDim, Examples) {
  EXPECT_TRUE(is_zero_dimensional(Ideal(Ps({"x^2", "y^2", "z^2"}))));
  EXPECT_FALSE(is_zero_dimensional(Ideal(Ps({"x"}, kXY))));
  EXPECT_TRUE(is_zero_dimensional(jacobian_ideal(P("x^2*y + y^2*z + z^2*x"))));
}

TEST(QuotientDimension, Examples) {
  EXPECT_EQ(quotient_dimension(jacobian_ideal(P("x^3 + y^3 + z^3"))), 8u);
  EXPECT_EQ(quotient_dimension(jacobian_ideal(P("x^2 + y^2 + z^2"))), 1u);
  EXPECT_THROW(quotient_dimension(Ideal(Ps({"x"}, kXY))), DomainError);
  auto sm = standard_monomials(buchberger(Ideal(Ps({"x^2", "y^2", "z^2"}))));
  EXPECT_EQ(sm.size(), 8u);
}

TEST(QuotientDimension, Brieskorn) {
  for (unsigned a = 2; a <= 6; ++a)
    for (unsigned b = 2; b <= 6; ++b) {
      Polynomial f = Polynomial::monomial(ExponentVector{a, 0}) + Polynomial::monomial(ExponentVector{0, b});
      EXPECT_EQ(quotient_dimension(jacobian_ideal(f)), oracle::box_monomial_count({a - 1, b - 1}));
    }
}

TEST(QuotientDimension, MilnorNumberOfIsolatedHomogeneous) {
  // Milnor number (d-1)^n for any homogeneous isolated singularity.
  EXPECT_EQ(quotient_dimension(jacobian_ideal(P("x^2*y + y^2*z + z^2*x"))), 8u);
  EXPECT_EQ(quotient_dimension(jacobian_ideal(P("x^4 + y^4 + z^4 + x*y*z^2"))), 27u);
}

TEST(Isolated, Examples) {
  EXPECT_TRUE(is_isolated_singularity(P("x^3 + y^3 + z^3")));
  EXPECT_FALSE(is_isolated_singularity(P("x^2*y", kXY)));
  EXPECT_TRUE(is_isolated_singularity(P("x^2*y + y^2*z + z^2*x")));
  EXPECT_FALSE(is_isolated_singularity(P("x + y", kXY)));
  EXPECT_THROW(is_isolated_singularity(P("x^2 + y", kXY)), DomainError);
}

TEST(Isolated, InvariantUnderLinearChange) {
  Gen g(11);
  std::vector<Polynomial> fs = Ps({"x^3 + y^3 + z^3", "x^2*y + y^2*z + z^2*x", "x^2*y + y^2*z", "x^3 + y^3"});
  for (const auto& f : fs) {
    bool base = is_isolated_singularity(f);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
      do {
        for (auto& row : m)
          for (auto& c : row) c = g.integer(-2, 2);
      } while (determinant(m) == 0);
      EXPECT_EQ(is_isolated_singularity(substitute_linear(f, LinearChange(m))), base);
    }
  }
}

TEST(RegularSequence, Examples) {
  EXPECT_FALSE(is_regular_sequence_homog(Ps({"x", "x^2"}, kXY)));
  EXPECT_TRUE(is_regular_sequence_homog(Ps({"x", "y^2"}, kXY)));
  EXPECT_THROW(is_regular_sequence_homog(Ps({"x"}, kXY)), ArityError);
  EXPECT_THROW(is_regular_sequence_homog(Ps({"x", "y^2 + x"}, kXY)), DomainError);
}

TEST(RegularSequence, SquaringFirstEntryPreservesRegularity) {
  auto seq = Ps({"x + y + z", "x^2 + 2*y*z", "y^2 + 2*x*z"});
  ASSERT_TRUE(is_regular_sequence_homog(seq));
  seq[0] = seq[0] * seq[0];
  EXPECT_TRUE(is_regular_sequence_homog(seq));
}

TEST(OracleEquivalence, RandomHomogeneousMembership) {
  Gen g(2024);
  int members = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = std::size_t(g.integer(2, 3));
    auto gens = random_homogeneous_ideal(g, n);
    Polynomial p(n);
    if (g.coin()) {
      // Build a member of degree 3 or 4 explicitly.
      unsigned d = unsigned(g.integer(3, 4));
      for (const auto& h : gens) {
        unsigned dh = *homogeneous_degree(h);
        if (dh <= d) p += h * g.homogeneous(n, d - dh, 2, 3);
      }
    }
    if (p.is_zero()) p = g.homogeneous(n, unsigned(g.integer(2, 4)), 3, 3);
    if (p.is_zero()) continue;
    auto expected = oracle::homogeneous_membership(p, gens);
    members += expected.has_value();
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto gb = buchberger(Ideal(gens), order);
      EXPECT_EQ(normal_form(p, gb).is_zero(), expected.has_value()) << order.name();
      auto q = lift_membership(p, Ideal(gens), order);
      EXPECT_EQ(q.has_value(), expected.has_value());
      if (q) expect_sound_lift(p, gens, *q);
    }
  }
  EXPECT_GT(members, 10);
}

TEST(OrderIndependence, QuotientDimension) {
  std::vector<Polynomial> fs = Ps({"x^3 + y^3 + z^3", "x^2*y + y^2*z + z^2*x", "x^4 + y^4 + z^4 + x*y*z^2"});
  for (const auto& f : fs)
    EXPECT_EQ(quotient_dimension(jacobian_ideal(f), MonomialOrder::grevlex()),
              quotient_dimension(jacobian_ideal(f), MonomialOrder::lex()));
}

TEST(RecordCheck, DetectsTampering) {
  auto gens = Ps({"x^2*y + y^2*z + z^2*x", "x*y*z - z^3"});
  auto gb = buchberger(Ideal(gens));
  ASSERT_TRUE(check_groebner_record(gens, gb.basis(), gb.order()).ok());
  auto dropped = gb.basis();
  dropped.pop_back();
  EXPECT_FALSE(check_groebner_record(gens, dropped, gb.order()).ok());
  auto scaled = gb.basis();
  scaled[0] *= Rational(2);
  EXPECT_FALSE(check_groebner_record(gens, scaled, gb.order()).reduced);
}

TEST(ModP, AgreesOnExamples) {
  EXPECT_EQ(is_zero_dimensional_mod_p(jacobian_ideal(P("x^3 + y^3 + z^3"))), std::optional<bool>(true));
  EXPECT_EQ(is_zero_dimensional_mod_p(jacobian_ideal(P("x^2*y", kXY))), std::optional<bool>(false));
  EXPECT_EQ(is_zero_dimensional_mod_p(Ideal(Ps({"1/32003*x", "y"}, kXY))), std::nullopt);
}
