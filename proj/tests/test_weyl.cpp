#include "oracle.hpp"
#include "weylver/sp_matrix.hpp"

#include <gtest/gtest.h>

using namespace weylver;

namespace {

WeylElement p(int i, int n = 1) { return WeylElement::p(n, i); }
WeylElement q(int i, int n = 1) { return WeylElement::q(n, i); }
EpsScalar e(int k = 1) { return EpsScalar::eps(k); }

}  // namespace

TEST(EpsScalar, Arithmetic) {
  EXPECT_EQ(eps_arith_mul(e(1), e(-1)), EpsScalar(1));
  EXPECT_EQ(eps_arith_add(e(2) * make_rational(1, 2), e(2) * make_rational(1, 2)), e(2));
  EXPECT_EQ(eps_arith_mul(e(-1) * make_rational(3, 4), e(3) * make_rational(2, 3)), e(2) * make_rational(1, 2));
  EXPECT_TRUE((e(1) - e(1)).is_zero());
  EXPECT_EQ((e(-1) * make_rational(1, 2) + EpsScalar(3) - e(2)).to_string(), "1/2*e^-1 + 3 - e^2");
}

TEST(WeylElement, DerivativesAndConstants) {
  const int n = 1;
  const WeylElement p2q = WeylElement::monomial(n, {2, 1});
  EXPECT_EQ(partial_derivative(p2q, p_index(1)), WeylElement::monomial(n, {1, 1}, 2));
  EXPECT_TRUE(partial_derivative(p(1), q_index(1)).is_zero());
  EXPECT_EQ(partial_derivative(p(1) * e(), p_index(1)), WeylElement(n, e()));
  EXPECT_EQ(eval_at_zero(WeylElement(n, 1) + p(1).commutative_product(q(1)) * e()), EpsScalar(1));
  EXPECT_TRUE(eval_at_zero(WeylElement::monomial(2, {0, 0, 0, 3})).is_zero());
  EXPECT_EQ(eval_at_zero(WeylElement(n, e(-1)) + p(1)), e(-1));
}

TEST(Moyal, Examples) {
  EXPECT_EQ(moyal(p(1), q(1)) - moyal(q(1), p(1)), WeylElement(1, e()));
  const WeylElement f = p(1) * make_rational(2, 3) + q(1).commutative_product(q(1));
  EXPECT_EQ(moyal(WeylElement(1, 1), f), f);
  // [DERIVED] order-by-order oracle, then frozen.
  const WeylElement p2 = WeylElement::monomial(1, {2, 0}), q2 = WeylElement::monomial(1, {0, 2});
  const WeylElement expected = WeylElement::monomial(1, {2, 2}) + WeylElement::monomial(1, {1, 1}, e() * Rational(2)) +
                               WeylElement(1, e(2) * make_rational(1, 2));
  EXPECT_EQ(oracle::moyal(p2, q2), expected);
  EXPECT_EQ(moyal(p2, q2), expected);
}

TEST(Moyal, Bracket) {
  EXPECT_EQ(bracket(p(1), q(1)), WeylElement(1, 1));
  const WeylElement f = WeylElement::monomial(1, {2, 3}, e());
  EXPECT_TRUE(bracket(f, f).is_zero());
  EXPECT_EQ(bracket(p(1).commutative_product(q(1)), p(1)), -p(1));
}

TEST(Moyal, GradedDegree) {
  EXPECT_EQ(graded_degree(p(1) * e()), 3);
  EXPECT_EQ(graded_degree(p(1).commutative_product(q(1)) + WeylElement(1, e())), 2);
  EXPECT_FALSE(graded_degree(WeylElement(1, 1) + p(1)).has_value());
}

TEST(Moyal, AgreesWithOracle) {
  RandomWeyl rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 2;
    const auto f = rng.element(n, 0, 4, 3, -1, 1), g = rng.element(n, 0, 4, 3, -1, 1);
    ASSERT_EQ(moyal(f, g), oracle::moyal(f, g)) << f.to_string() << " * " << g.to_string();
  }
}

TEST(Moyal, AssociativityUnitGrading) {
  RandomWeyl rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 2;
    const auto f = rng.element(n, 0, 4, 2, -1, 1), g = rng.element(n, 0, 4, 2, -1, 1),
               h = rng.element(n, 0, 4, 2, -1, 1);
    ASSERT_EQ(moyal(moyal(f, g), h), moyal(f, moyal(g, h)));
    ASSERT_EQ(moyal(f, WeylElement(n, 1)), f);
    const auto a = rng.monomial(n, rng.uniform(0, 4), -1, 1), b = rng.monomial(n, rng.uniform(0, 4), -1, 1);
    ASSERT_EQ(graded_degree(moyal(a, b)), *graded_degree(a) + *graded_degree(b));
  }
}

TEST(Moyal, LieBracketIdentities) {
  RandomWeyl rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 2;
    const auto f = rng.element(n, 0, 4, 2, -1, 1), g = rng.element(n, 0, 4, 2, -1, 1),
               h = rng.element(n, 0, 4, 2, -1, 1);
    ASSERT_EQ(bracket(f, g), -bracket(g, f));
    ASSERT_TRUE((bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))).is_zero());
    ASSERT_EQ(bracket(f, moyal(g, h)), moyal(bracket(f, g), h) + moyal(g, bracket(f, h)));
  }
}

TEST(Sp, QuadraticCorrespondence) {
  RationalMatrix d(2, 2);
  d << 1, 0, 0, -1;
  EXPECT_EQ(sp_to_quadratic(SpMatrix(1, d)), p(1).commutative_product(q(1)));
  EXPECT_TRUE(sp_to_quadratic(SpMatrix::zero(1)).is_zero());
  RationalMatrix s = RationalMatrix::Constant(2, 2, Rational(0));
  s(0, 0) = 1;
  EXPECT_EQ(sp_to_quadratic(SpMatrix::from_lowered(1, s)), WeylElement::monomial(1, {2, 0}, make_rational(1, 2)));
  EXPECT_THROW(SpMatrix(1, RationalMatrix::Identity(2, 2)), std::invalid_argument);
}

TEST(Sp, ActionExamples) {
  RationalMatrix d(2, 2);
  d << 1, 0, 0, -1;
  const SpMatrix a(1, d);
  EXPECT_EQ(sp_action(a, p(1)), -p(1));
  EXPECT_TRUE(sp_action(a, WeylElement(1, 1)).is_zero());
  const WeylElement q2 = WeylElement::monomial(1, {0, 2});
  EXPECT_EQ(sp_action(a, q2), q2 * EpsScalar(2));
}

namespace {

SpMatrix random_sp(RandomWeyl& rng, int n) {
  RationalMatrix s(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i; j < 2 * n; ++j) s(i, j) = s(j, i) = rng.uniform(0, 2) == 0 ? Rational(0) : rng.coefficient();
  return SpMatrix::from_lowered(n, s);
}

}  // namespace

TEST(Sp, ActionIsBracketAndHomomorphism) {
  RandomWeyl rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 2;
    const SpMatrix a = random_sp(rng, n), b = random_sp(rng, n);
    const auto f = rng.element(n, 0, 4, 3, -1, 1);
    ASSERT_EQ(sp_action(a, f), bracket(sp_to_quadratic(a), f));
    // The sign forced by the derivative definition: [A~, B~]_eps = ([A, B])~.
    ASSERT_EQ(bracket(sp_to_quadratic(a), sp_to_quadratic(b)), sp_to_quadratic(commutator(a, b)));
    ASSERT_EQ(quadratic_to_sp(sp_to_quadratic(a)), to_eps(a));
  }
}
