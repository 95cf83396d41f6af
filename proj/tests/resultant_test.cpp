#include "support.hpp"

#include "tolerant/generators.hpp"

namespace tolerant {
namespace {

using namespace testing;

// lc(f)^{deg_x G} * prod over roots of G(r, u), for f with known roots.
Polynomial resultant_from_roots(const RootMultiset& roots, const UPolynomial& g) {
  const FieldDescriptor& field = roots.leading.field();
  Polynomial acc = Polynomial::constant(roots.leading.pow(static_cast<long>(g.x_degree())));
  for (const auto& [r, m] : roots.entries) {
    std::vector<FieldElement> in_u;
    for (const auto& c : g.coeffs()) in_u.push_back(c.evaluate(r));
    acc *= Polynomial(field, std::move(in_u)).pow(m);
  }
  return acc;
}

TEST(SylvesterResultant, Examples) {
  EXPECT_EQ(sylvester_resultant(P("x^2 + 1"), P("2*x")), E("4"));
  EXPECT_EQ(sylvester_resultant(P("x - 2"), P("x - 3")), E("-1"));
  EXPECT_EQ(sylvester_resultant(P("x^3 + x + 5"), P("1")), E("1"));
  EXPECT_EQ(sylvester_resultant(P("x^3 + x + 5"), P("7")), E("343"));
  EXPECT_EQ(sylvester_resultant(P("2*x - 2"), P("x^2 + 1")), E("8"));
  EXPECT_EQ(sylvester_resultant(P("x^2 - 1"), P("(x - 1)*(x + 3)")), E("0"));
  expect_error(ErrorCode::kZeroInput, [] { sylvester_resultant(P("x"), Polynomial(Q())); });
}

TEST(SylvesterResultant, SwapSign) {
  const Polynomial f = P("x^3 - 2*x + 7");
  const Polynomial g = P("4*x^3 + x - 1");
  EXPECT_EQ(sylvester_resultant(f, g), -sylvester_resultant(g, f));
  const Polynomial h = P("4*x^2 + x - 1");
  EXPECT_EQ(sylvester_resultant(f, h), sylvester_resultant(h, f));
}

TEST(ResultantInU, Examples) {
  const FieldDescriptor q = Q();
  const UPolynomial g(q, {P("2*x"), P("1")});
  EXPECT_EQ(resultant_in_u(P("x^2 - 1"), g), P("x^2 - 4"));

  const FieldDescriptor k = Fpt(5);
  const UPolynomial quartic(k, {P("0", k), P("0", k), P("0", k), P("0", k), P("1", k)});
  EXPECT_EQ(resultant_in_u(P("x^5 - t", k), quartic), P("x^20", k));

  EXPECT_EQ(resultant_in_u(P("x - 7"), UPolynomial(q, {P("1")})), P("1"));
}

TEST(ResultantInU, InterpolationMatchesRootProducts) {
  for (const auto& field : {Q(), Fp(101), Fp(7), Fp(3)}) {
    CaseGenerator gen(field, 11, {7, 3, false});
    for (int i = 0; i < 25; ++i) {
      const GeneratedCase c = gen.next();
      if (!c.roots || c.polynomial.degree() < 1) continue;
      const UPolynomial g = hasse_series(c.polynomial);
      EXPECT_EQ(resultant_in_u(c.polynomial, g), resultant_from_roots(*c.roots, g))
          << field.to_string() << ": " << to_string(c.polynomial);
      EXPECT_EQ(shift_resultant(c.polynomial), resultant_from_roots(*c.roots, g))
          << field.to_string() << ": " << to_string(c.polynomial);
    }
  }
}

TEST(ShiftResultant, Examples) {
  // lc^{dg+n} prod_{i<j} (u^2 - (r_i - r_j)^2).
  EXPECT_EQ(shift_resultant(P("x^2 - 1")), P("x^2 - 4"));
  EXPECT_EQ(shift_resultant(P("2*x^2 - 2")), P("8*x^2 - 32"));
  EXPECT_EQ(shift_resultant(P("(x - 2)^2*(x - 3)")), P("x^2*(x^2 - 1)^2"));
  EXPECT_EQ(shift_resultant(P("3*x + 1")), P("3"));
  const FieldDescriptor k = Fpt(5);
  EXPECT_EQ(shift_resultant(P("x^5 - t", k)), P("x^20", k));
  // p | n: the series drops to x-degree n - 2 and the formal degree is removed.
  for (const char* text : {"x^5 + x^4 + 1", "x^10 + 3*x^3 - 1", "2*x^5 + x - 1"}) {
    const Polynomial f = P(text, Fp(5));
    EXPECT_EQ(shift_resultant(f), resultant_in_u(f, hasse_series(f))) << text;
  }
  expect_error(ErrorCode::kConstantInput, [] { shift_resultant(P("4")); });
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(P("x^2 + 1")), E("-4"));
  EXPECT_EQ(discriminant(P("x - 5")), E("1"));
  EXPECT_EQ(discriminant(P("(x - 1)*(x - 2)")), E("1"));
  EXPECT_EQ(discriminant(P("(x - 1)^2*(x - 2)")), E("0"));
  EXPECT_EQ(discriminant(P("x^5 - t", Fpt(5))), E("0", Fpt(5)));
  expect_error(ErrorCode::kConstantInput, [] { discriminant(P("4")); });
}

TEST(Discriminant, QuadraticAndCubicOracles) {
  // b^2 - 4ac and b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd.
  const std::vector<std::vector<long>> quadratics{{3, -5, 2}, {1, 7, -9}, {-4, 0, 11}};
  for (const auto& v : quadratics) {
    const mpq_class a = v[0], b = v[1], c = v[2];
    const Polynomial f(Q(), {E(std::to_string(v[2])), E(std::to_string(v[1])), E(std::to_string(v[0]))});
    EXPECT_EQ(discriminant(f).rational(), b * b - 4 * a * c);
  }
  const std::vector<std::vector<long>> cubics{{1, -3, 0, 4}, {2, 1, -5, 3}, {-3, 4, 7, -1}};
  for (const auto& v : cubics) {
    const mpq_class a = v[0], b = v[1], c = v[2], d = v[3];
    const Polynomial f(Q(), {E(std::to_string(v[3])), E(std::to_string(v[2])), E(std::to_string(v[1])),
                             E(std::to_string(v[0]))});
    EXPECT_EQ(discriminant(f).rational(),
              b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d);
  }
}

TEST(Discriminant, CharacteristicTwoUsesExactDerivativeDegree) {
  // x^2 + x + 1 over F_2: f' = 1 has degree 0 < n - 1; the discriminant is 1.
  EXPECT_EQ(discriminant(P("x^2 + x + 1", Fp(2))), E("1", Fp(2)));
  // x^3 + x + 1 over F_3: f' = 1 and the discriminant is -4 - 27 = -31 = 2.
  EXPECT_EQ(discriminant(P("x^3 + x + 1", Fp(3))), E("2", Fp(3)));
}

}  // namespace
}  // namespace tolerant
