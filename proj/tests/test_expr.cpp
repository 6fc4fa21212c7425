#include <gtest/gtest.h>

#include "nakai/expr.hpp"
#include "support.hpp"

using namespace nakai;
using nakai::testing::Gen;
using nakai::testing::kXYZ;
using nakai::testing::P;

TEST(ParsePoly, CyclicCubic) {
  Polynomial f = parse_poly(PolySource{"x^2*y + y^2*z + z^2*x", kXYZ});
  Polynomial expected = Polynomial::from_terms(
      3, {{ExponentVector{2, 1, 0}, 1}, {ExponentVector{0, 2, 1}, 1}, {ExponentVector{1, 0, 2}, 1}});
  EXPECT_EQ(f, expected);
}

TEST(ParsePoly, Zero) { EXPECT_TRUE(P("0").is_zero()); }

TEST(ParsePoly, BinomialCube) {
  // Binomial theorem oracle: coefficients C(3,k).
  std::vector<Term> terms;
  for (unsigned k = 0; k <= 3; ++k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), 3, k);
    terms.push_back({ExponentVector{3 - k, k, 0}, Rational(c)});
  }
  EXPECT_EQ(P("(x + y)^3"), Polynomial::from_terms(3, terms));
}

TEST(ParsePoly, RationalsAndSigns) {
  EXPECT_EQ(P("-3/6*x + (-y)"), Rational(-1, 2) * P("x") - P("y"));
  EXPECT_EQ(P("+x - 0"), P("x"));
  EXPECT_THROW(P("x - -0"), ParseError);
  EXPECT_EQ(P("2^10"), Polynomial::constant(3, 1024));
}

TEST(ParsePoly, ErrorsCarryPositions) {
  try {
    P("x + w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_NE(std::string(e.what()).find("unknown identifier"), std::string::npos);
  }
  try {
    P("x^-2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("negative exponent"), std::string::npos);
  }
  EXPECT_THROW(P("2x"), ParseError);
  EXPECT_THROW(P("x y"), ParseError);
  EXPECT_THROW(P("x(y)"), ParseError);
  EXPECT_THROW(P("(x + y"), ParseError);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
  EXPECT_THROW(P("x^"), ParseError);
  EXPECT_THROW(P("x ^ 1.5"), ParseError);
}

TEST(ParsePoly, IndexedNamesAreIdentifiers) {
  auto vars = indexed_variables(3);
  EXPECT_EQ(parse_poly("x1*x2 + x3^2", vars), P("x*y + z^2"));
  EXPECT_THROW(parse_poly("y2", vars), ParseError);
}

TEST(FormatPoly, Basics) {
  EXPECT_EQ(format_poly(Polynomial(2), nakai::testing::kXY), "0");
  EXPECT_EQ(format_poly(P("-y + x^2", nakai::testing::kXY), nakai::testing::kXY, MonomialOrder::lex()), "x^2 - y");
  EXPECT_EQ(format_poly(P("-3/2*x*y - 1", nakai::testing::kXY), nakai::testing::kXY), "-3/2*x*y - 1");
}

TEST(FormatPoly, RoundTripProperty) {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    auto vars = indexed_variables(n);
    Polynomial p = g.poly(n, 5, 8);
    for (const MonomialOrder& ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::grlex()})
      EXPECT_EQ(parse_poly(format_poly(p, vars, ord), vars), p);
  }
}

TEST(Variables, InferNaturalOrder) {
  std::vector<std::string> texts = {"x10 + x2*y", "x1^2 - z"};
  EXPECT_EQ(infer_variables(texts), (std::vector<std::string>{"x1", "x2", "x10", "y", "z"}));
  EXPECT_EQ(parse_variable_list(" x, y ,z"), kXYZ);
  EXPECT_THROW(parse_variable_list("x,x"), DomainError);
  EXPECT_THROW(parse_variable_list("x,2y"), DomainError);
}
