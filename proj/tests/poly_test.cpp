#include "support.hpp"

namespace tolerant {
namespace {

using namespace testing;

TEST(Polynomial, NormalizesAndReportsDegree) {
  const Polynomial f(Q(), {E("1"), E("0"), E("0")});
  EXPECT_EQ(f.degree(), 0);
  EXPECT_EQ(Polynomial(Q()).degree(), Polynomial::kNegInfinity);
  EXPECT_TRUE(Polynomial(Q(), {E("0")}).is_zero());
  expect_error(ErrorCode::kZeroPolynomial, [] { Polynomial(Q()).leading(); });
}

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(gcd(P("x^2 - 1"), P("x - 1")), P("x - 1"));
  const auto [q, r] = divmod(P("x^3"), P("x - 1"));
  EXPECT_EQ(q, P("x^2 + x + 1"));
  EXPECT_EQ(r, P("1"));
  EXPECT_EQ(gcd(P("x^2 + 1", Fp(2)), P("x + 1", Fp(2))), P("x + 1", Fp(2)));
  expect_error(ErrorCode::kDivisionByZero, [] { divmod(P("x"), Polynomial(Q())); });
  expect_error(ErrorCode::kFieldMismatch, [] { P("x", Fp(3)) + P("x", Fp(5)); });
  EXPECT_EQ(P("(x + 1)^3"), P("x^3 + 3*x^2 + 3*x + 1"));
  EXPECT_EQ(P("x^2 + x").inflate(3), P("x^6 + x^3"));
}

TEST(Polynomial, ExactDivisionRejectsRemainders) {
  EXPECT_EQ(exact_div(P("x^2 - 1"), P("x + 1")), P("x - 1"));
  EXPECT_THROW(exact_div(P("x^2 + 1"), P("x + 1")), Error);
}

TEST(HasseDerivative, Examples) {
  EXPECT_EQ(hasse_derivative(P("x^2 + 1"), 1), P("2*x"));
  EXPECT_EQ(hasse_derivative(P("x^4"), 2), P("6*x^2"));
  const Polynomial f = P("x^5 - t", Fpt(5));
  for (unsigned i = 1; i <= 4; ++i) EXPECT_TRUE(hasse_derivative(f, i).is_zero()) << i;
  EXPECT_EQ(hasse_derivative(f, 5), P("1", Fpt(5)));
  EXPECT_EQ(hasse_derivative(f, 0), f);
  EXPECT_TRUE(hasse_derivative(f, 6).is_zero());
}

TEST(HasseDerivative, MatchesScaledDerivativeInCharacteristicZero) {
  const Polynomial f = P("3*x^7 - x^4 + 5*x^2 - 2");
  Polynomial d = f;
  mpz_class factorial = 1;
  for (unsigned r = 1; r <= 7; ++r) {
    d = d.derivative();
    factorial *= r;
    EXPECT_EQ(hasse_derivative(f, r).scaled(FieldElement::from_integer(Q(), factorial)), d) << r;
  }
}

TEST(TaylorShift, Examples) {
  EXPECT_EQ(taylor_shift(P("x^2"), E("1")), P("x^2 + 2*x + 1"));
  const Polynomial f = P("(x-2)^2*(x-3)");
  EXPECT_EQ(taylor_shift(f, E("0")), f);
  const Polynomial shifted = taylor_shift(f, E("1"));
  EXPECT_EQ(shifted, P("(x-1)^2*(x-2)"));
  for (unsigned i = 0; i <= 3; ++i) EXPECT_EQ(shifted.coeff(i), hasse_derivative(f, i).evaluate(E("1"))) << i;
}

TEST(Homothety, Examples) {
  EXPECT_EQ(homothety(P("x^2 + 1"), E("2")), P("4*x^2 + 1"));
  const Polynomial f = P("(x-2)^2*(x-3)");
  EXPECT_EQ(homothety(f, E("1")), f);
  EXPECT_EQ(homothety(P("x^3 - x"), E("-1")), P("-x^3 + x"));
  expect_error(ErrorCode::kZeroScale, [&] { homothety(f, E("0")); });
}

TEST(Reciprocal, Examples) {
  EXPECT_EQ(reciprocal(P("(x-2)^2*(x-3)")), P("(1-2*x)^2*(1-3*x)"));
  EXPECT_EQ(reciprocal(P("x^2 + 3*x + 1")), P("x^2 + 3*x + 1"));
  EXPECT_EQ(reciprocal(P("(x-1)^2*(x-2)^2")), P("(1-x)^2*(1-2*x)^2"));
  expect_error(ErrorCode::kZeroConstantTerm, [] { reciprocal(P("x^2 + x")); });
}

TEST(Separability, Examples) {
  EXPECT_TRUE(is_separable(P("x^2 - 1")));
  EXPECT_FALSE(is_separable(P("(x-1)^2")));
  EXPECT_FALSE(is_separable(P("x^5 - t", Fpt(5))));
  EXPECT_TRUE(is_separable(P("x^2 - t", Fpt(5))));
  expect_error(ErrorCode::kConstantInput, [] { is_separable(P("3")); });
}

TEST(Desubstitute, Examples) {
  const auto quintic = desubstitute(P("x^5 - t", Fpt(5)));
  EXPECT_EQ(quintic.f_sep, P("x - t", Fpt(5)));
  EXPECT_EQ(quintic.e, 1u);
  const auto dectic = desubstitute(P("x^10 - t", Fpt(5)));
  EXPECT_EQ(dectic.f_sep, P("x^2 - t", Fpt(5)));
  EXPECT_EQ(dectic.e, 1u);
  const auto q = desubstitute(P("x^2 + 1"));
  EXPECT_EQ(q.f_sep, P("x^2 + 1"));
  EXPECT_EQ(q.e, 0u);
  const auto deep = desubstitute(P("x^50 + t*x^25 + 1", Fpt(5)));
  EXPECT_EQ(deep.f_sep, P("x^2 + t*x + 1", Fpt(5)));
  EXPECT_EQ(deep.e, 2u);
  EXPECT_EQ(deep.f_sep.inflate(25), P("x^50 + t*x^25 + 1", Fpt(5)));
  expect_error(ErrorCode::kConstantInput, [] { desubstitute(P("2")); });
}

TEST(FrobeniusTwist, Examples) {
  EXPECT_EQ(frobenius_twist(P("x - 1", Fp(5)), 1), P("x - 1", Fp(5)));
  EXPECT_EQ(frobenius_twist(P("x - t", Fpt(5)), 1), P("x - t^5", Fpt(5)));
  const Polynomial g = P("x^2 + (t+1)/t", Fpt(3));
  EXPECT_EQ(frobenius_twist(g, 0), g);
  expect_error(ErrorCode::kUnsupportedField, [] { frobenius_twist(P("x - 1"), 1); });
}

TEST(RootMultiset, Expands) {
  const RootMultiset roots{{{E("2"), 2}, {E("3"), 1}}, E("5")};
  EXPECT_EQ(roots.expand(), P("5*(x-2)^2*(x-3)"));
}

TEST(Printing, CanonicalText) {
  EXPECT_EQ(to_string(P("(x-2)^2*(x-3)")), "x^3 - 7*x^2 + 16*x - 12");
  EXPECT_EQ(to_string(P("-x^2/3 + 1")), "-1/3*x^2 + 1");
  EXPECT_EQ(to_string(Polynomial(Q())), "0");
  EXPECT_EQ(to_string(P("x^2 + (t+1)/t*x", Fpt(3))), "x^2 + ((t + 1)/t)*x");
  for (const char* text : {"-1/3*x^2 + 1", "x^5 + 4*t", "((t + 1)/t)*x^3 - t^2"}) {
    const FieldDescriptor k = std::string(text).find('t') == std::string::npos ? Q() : Fpt(5);
    EXPECT_EQ(P(to_string(P(text, k)), k), P(text, k)) << text;
  }
}

}  // namespace
}  // namespace tolerant
