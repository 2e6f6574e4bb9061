#include <gtest/gtest.h>

#include "support.hpp"
#include "wanas/errors.hpp"

namespace wanas {
namespace {

using testing::P;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_TRUE((Rational(2, 3) - Rational(2, 3)).is_zero());
}

TEST(Rational, RejectsDecimalsAndJunk) {
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational::parse("1e3"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), Error);
}

TEST(PolyAdd, Examples) {
  EXPECT_TRUE(poly_add(P("alpha"), P("-alpha")).is_zero());
  EXPECT_EQ(poly_add(P("alpha*beta"), P("beta^2")), P("alpha*beta + beta^2"));
  EXPECT_EQ(poly_add(P("alpha^2 + c"), P("alpha^2")).str(), "2*alpha^2 + c");
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(poly_mul(P("beta - 2*eta"), P("beta + 2*eta")), P("beta^2 - 4*eta^2"));
  EXPECT_TRUE(poly_mul(Polynomial(0), P("alpha^3 + c")).is_zero());
  EXPECT_EQ(poly_mul(P("alpha - beta"), P("alpha - beta")).str(),
            "alpha^2 - 2*alpha*beta + beta^2");
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(P("2*gamma^2"), {{Var::gamma, Rational(1)}}), Rational(2));
  EXPECT_EQ(poly_eval(Polynomial(), {}), Rational(0));
  EXPECT_EQ(poly_eval(P("alpha^2 + beta^2"),
                      {{Var::alpha, Rational(1, 2)}, {Var::beta, Rational(1, 2)}}),
            Rational(1, 2));
  EXPECT_THROW(poly_eval(P("alpha*beta"), {{Var::alpha, Rational(1)}}), MissingVariable);
}

TEST(PolySubstitute, Examples) {
  EXPECT_EQ(poly_substitute(P("eta^2"), {{Var::eta, Polynomial(1)}}), Polynomial(1));
  EXPECT_EQ(poly_substitute(P("(alpha + beta - gamma)/2"), {{Var::gamma, Polynomial(0)}}),
            P("alpha/2 + beta/2"));
  EXPECT_EQ(poly_substitute(P("alpha*gamma"), {{Var::gamma, P("2*beta")}}), P("2*alpha*beta"));
}

TEST(PolySubstitute, FixpointResolvesChains) {
  const Substitution chain{{Var::delta, P("-alpha")}, {Var::alpha, P("beta")}};
  EXPECT_EQ(substitute_to_fixpoint(P("alpha + delta + gamma"), chain), P("gamma"));
  EXPECT_THROW(substitute_to_fixpoint(P("alpha"), {{Var::alpha, P("beta")}, {Var::beta, P("alpha")}}),
               Error);
}

TEST(PolyReduce, Examples) {
  EXPECT_EQ(poly_reduce(P("eta^2"), P("eta^2 - 1"), Var::eta), Polynomial(1));
  EXPECT_TRUE(poly_reduce(P("alpha*gamma - beta*delta"), P("alpha*gamma - beta*delta"), Var::alpha)
                  .is_zero());
  EXPECT_EQ(poly_reduce(P("eta^3*beta"), P("eta^2 - 1"), Var::eta), P("eta*beta"));
}

TEST(PolyReduce, RejectsUnsupportedRelations) {
  EXPECT_THROW(poly_reduce(P("alpha"), P("alpha + beta + gamma"), Var::alpha),
               UnsupportedRelation);
  EXPECT_EQ(reduction_variable(P("alpha*gamma + beta*delta")), Var::alpha);
  EXPECT_EQ(reduction_variable(P("eta^2 - 1")), Var::eta);
}

TEST(PolyRender, CanonicalWireFormat) {
  EXPECT_EQ(P("c - 3/2*alpha^2*beta").str(), "-3/2*alpha^2*beta + c");
  EXPECT_EQ(Polynomial().str(), "0");
  EXPECT_EQ(P("-(alpha^2 + 3/2*beta^2)").str(), "-alpha^2 - 3/2*beta^2");
  for (const char* text : {"alpha*gamma - 1/4*beta*delta + eta", "-c", "7/3", "beta^2*eta"}) {
    const Polynomial p = P(text);
    EXPECT_EQ(Polynomial::parse(p.str()), p) << text;
  }
}

TEST(Expression, Grammar) {
  EXPECT_EQ(P("2*(alpha - beta)^2 / 4"), P("alpha^2/2 - alpha*beta + beta^2/2"));
  EXPECT_EQ(P("-(-eta)"), P("eta"));
  EXPECT_THROW(P("alpha / beta"), ParseError);
  EXPECT_THROW(P("alpha beta"), ParseError);
  EXPECT_THROW(P("zeta"), ParseError);
  EXPECT_THROW(P("0.5*alpha"), ParseError);
  const SymbolTable sym{{"a1", P("(alpha - beta - gamma)/2")}};
  EXPECT_EQ(parse_expression("2*a1 + beta", sym), P("alpha - gamma"));
}

TEST(Expression, ConditionsAndAssignments) {
  auto [eq, is_eq] = parse_condition("alpha^2 = beta^2");
  EXPECT_TRUE(is_eq);
  EXPECT_EQ(eq, P("alpha^2 - beta^2"));
  auto [ne, is_eq2] = parse_condition("alpha + delta != 0");
  EXPECT_FALSE(is_eq2);
  EXPECT_EQ(ne, P("alpha + delta"));

  const Assignment a = parse_assignment("alpha=1/2, eta=-1");
  EXPECT_EQ(a.at(Var::alpha), Rational(1, 2));
  EXPECT_EQ(a.at(Var::eta), Rational(-1));
  EXPECT_THROW(parse_assignment("alpha=0.5"), ParseError);
  EXPECT_THROW(parse_assignment("zeta=1"), ParseError);
  EXPECT_THROW(ParameterAssignment(parse_assignment("c=1")), InvalidAssignment);
}

// ---------------------------------------------------------------- properties

bool canonical(const Polynomial& p) {
  for (const auto& [m, coeff] : p.terms())
    if (coeff.is_zero()) return false;
  return true;
}

TEST(RingAxioms, RandomizedExactIdentities) {
  testing::RandomPolys gen(20260101);
  constexpr int kCases = 1200;
  for (int n = 0; n < kCases; ++n) {
    const Polynomial p = gen.poly(), q = gen.poly(), r = gen.poly();
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ((p + q) + r, p + (q + r));
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_TRUE((p - p).is_zero());
    ASSERT_EQ(p * Polynomial(1), p);
    ASSERT_TRUE(canonical(p * q - r) && canonical(p + q));
    ASSERT_EQ(Polynomial::parse((p * q - r).str()), p * q - r);
  }
}

TEST(RingAxioms, EvaluationIsAHomomorphism) {
  testing::RandomPolys gen(7);
  for (int n = 0; n < 1000; ++n) {
    const Polynomial p = gen.poly(), q = gen.poly();
    const Assignment s = gen.point();
    ASSERT_EQ(poly_eval(p * q, s), poly_eval(p, s) * poly_eval(q, s));
    ASSERT_EQ(poly_eval(p + q, s), poly_eval(p, s) + poly_eval(q, s));
  }
}

TEST(RingAxioms, ReductionIsIdempotentAndSound) {
  testing::RandomPolys gen(99);
  const Polynomial eta_rel = P("eta^2 - 1");
  const Polynomial g6_rel = P("alpha*gamma - beta*delta");
  for (int n = 0; n < 1000; ++n) {
    const Polynomial p = gen.poly(5, 3);
    const Polynomial once = poly_reduce(p, eta_rel, Var::eta);
    ASSERT_EQ(poly_reduce(once, eta_rel, Var::eta), once);
    ASSERT_LE(once.degree_in(Var::eta), 1);
    Assignment s = gen.point();
    s[Var::eta] = Rational(n % 2 ? 1 : -1);
    ASSERT_EQ(poly_eval(once, s), poly_eval(p, s));

    const Polynomial r = poly_reduce(p, g6_rel, Var::alpha);
    ASSERT_EQ(poly_reduce(r, g6_rel, Var::alpha), r);
    // On the variety alpha*gamma = beta*delta the value is unchanged.
    s[Var::gamma] = Rational(2);
    s[Var::alpha] = s[Var::beta] * s[Var::delta] / Rational(2);
    ASSERT_EQ(poly_eval(r, s), poly_eval(p, s));
  }
}

}  // namespace
}  // namespace wanas
