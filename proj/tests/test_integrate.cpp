#include "oracle.hpp"
#include "weylver/integrate.hpp"

#include <gtest/gtest.h>

using namespace weylver;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

UPolynomial u(int k, int i) { return UPolynomial::variable(k, i); }

}  // namespace

TEST(Simplex, MonomialIntegrals) {
  EXPECT_EQ(simplex_monomial_integral({0, 0}), r(1, 2));
  EXPECT_EQ(simplex_monomial_integral({0, 1}), r(1, 3));
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(simplex_monomial_integral(std::vector<int>(k, 0)), Rational(1) / factorial(k));
}

TEST(Simplex, RegionIntegrals) {
  const UPolynomial one(2, EpsScalar(1));
  EXPECT_EQ(integrate_over_region(one, OrderedRegion::standard(2)), EpsScalar(r(1, 2)));
  const UPolynomial f = one - u(2, 1) * EpsScalar(2);
  EXPECT_EQ(integrate_over_region(f, OrderedRegion::standard(2)), EpsScalar(r(-1, 6)));
  EXPECT_EQ(integrate_over_region(u(2, 0), OrderedRegion::from_order({1, 0})), EpsScalar(r(1, 3)));
  EXPECT_THROW(OrderedRegion::from_order({0, 0}), std::invalid_argument);
  EXPECT_THROW(integrate_over_region(one, OrderedRegion::standard(3)), std::invalid_argument);
}

TEST(Simplex, AgreesWithIteratedIntegration) {
  RandomWeyl rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + trial % 4;
    UPolynomial p(k);
    for (int t = 0; t < 4; ++t) {
      Exponents e(k);
      for (auto& x : e) x = rng.uniform(0, 3);
      p.add_term(e, rng.eps_coefficient(-1, 1));
    }
    ASSERT_EQ(integrate_over_region(p, OrderedRegion::standard(k)), oracle::iterated_simplex_integral(p));
  }
}

TEST(Simplex, RegionDecompositionIsExhaustive) {
  RandomWeyl rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + trial % 4;
    UPolynomial p(k);
    for (int t = 0; t < 5; ++t) {
      Exponents e(k);
      for (auto& x : e) x = rng.uniform(0, 3);
      p.add_term(e, rng.eps_coefficient(0, 1));
    }
    ASSERT_EQ(integrate_over_cube_by_regions(p), integrate_over_cube(p));
  }
}

TEST(CycleIntegrals, Values) {
  EXPECT_EQ(psi_cycle_integral(2), r(-1, 3));
  EXPECT_EQ(psi_cycle_integral(3), r(0));
  EXPECT_EQ(psi_cycle_integral(4), r(1, 45));
  EXPECT_EQ(closed_form_I(2), r(-1, 3));
  EXPECT_EQ(closed_form_I(3), r(0));
  EXPECT_EQ(closed_form_I(4), r(1, 45));
}

TEST(CycleIntegrals, MatchClosedForm) {
  for (int j = 2; j <= 8; ++j) EXPECT_EQ(psi_cycle_integral(j), closed_form_I(j)) << "j = " << j;
}

// The same integrals through the generic machinery: psi branches on every
// ordering region of the cube, multiplied as polynomials and integrated.
TEST(CycleIntegrals, GenericRegionRoute) {
  for (int j = 2; j <= 5; ++j) {
    EpsScalar total;
    for (const auto& perm : all_permutations(j)) {
      const auto region = OrderedRegion::from_order(perm.image);
      const auto rank = region.ranks();
      UPolynomial f(j, EpsScalar(1));
      for (int a = 0; a < j; ++a) {
        const int b = (a + 1) % j;
        f = f * psi_branch(j, a, b, rank[a] < rank[b]);
      }
      total += integrate_over_region(f, region);
    }
    EXPECT_EQ(total, EpsScalar(closed_form_I(j))) << "j = " << j;
  }
}

TEST(Bernoulli, Values) {
  EXPECT_EQ(bernoulli(0), r(1));
  EXPECT_EQ(bernoulli(1), r(-1, 2));
  EXPECT_EQ(bernoulli(2), r(1, 6));
  EXPECT_EQ(bernoulli(4), r(-1, 30));
  EXPECT_EQ(bernoulli(12), r(-691, 2730));
  EXPECT_EQ(bernoulli(7), r(0));
}
