#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace weylver;

namespace {

WeylElement p(int i, int n = 1) { return WeylElement::p(n, i); }
WeylElement q(int i, int n = 1) { return WeylElement::q(n, i); }
WeylElement one(int n = 1) { return WeylElement(n, 1); }

}  // namespace

TEST(Hochschild, BoundaryExamples) {
  const auto c = ChainTensor::elementary({p(1), q(1)});
  const auto d = hochschild_boundary(c);
  ChainTensor expected(1, 0);
  expected.add_elementary({oracle::moyal(p(1), q(1)) - oracle::moyal(q(1), p(1))}, 1);
  EXPECT_EQ(d, expected);
  EXPECT_EQ(d, ChainTensor::elementary({WeylElement(1, EpsScalar::eps())}));

  const auto f = WeylElement::monomial(1, {2, 1}) + q(1);
  EXPECT_TRUE(hochschild_boundary(ChainTensor::elementary({one(), f})).is_zero());
  EXPECT_THROW(hochschild_boundary(ChainTensor::elementary({f})), std::invalid_argument);
}

TEST(Hochschild, CanonicalCycle) {
  const auto c2 = canonical_cycle(1);
  EXPECT_EQ(c2, ChainTensor::elementary({one(), p(1), q(1)}) - ChainTensor::elementary({one(), q(1), p(1)}));
  // d c_2 = -1 (x) eps is degenerate: c_2 is a cycle of the normalized complex.
  EXPECT_EQ(hochschild_boundary(c2), ChainTensor::elementary({one(), WeylElement(1, EpsScalar::eps())}) * EpsScalar(-1));
  EXPECT_TRUE(normalize_chain(hochschild_boundary(c2)).is_zero());
  const auto c4 = canonical_cycle(2);
  EXPECT_EQ(c4.terms().size(), 24u);
  EXPECT_TRUE(normalize_chain(hochschild_boundary(c4)).is_zero());
}

TEST(Hochschild, Normalize) {
  EXPECT_TRUE(normalize_chain(ChainTensor::elementary({one(), WeylElement(1, EpsScalar::eps()), q(1)})).is_zero());
  EXPECT_EQ(normalize_chain(ChainTensor::elementary({one(), p(1) + WeylElement(1, 3), q(1)})),
            ChainTensor::elementary({one(), p(1), q(1)}));
  EXPECT_EQ(normalize_chain(canonical_cycle(1)), canonical_cycle(1));
}

TEST(Hochschild, BoundarySquaredVanishes) {
  RandomWeyl rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    RandomSpec spec;
    spec.n = 1 + trial % 2;
    spec.max_degree = 3;
    spec.normalized = false;
    const int k = 2 + trial % 3;
    const auto c = rng.chain(spec, k);
    ASSERT_TRUE(hochschild_boundary(hochschild_boundary(c)).is_zero()) << c.to_string();
  }
}

TEST(Hochschild, NormalizationProperties) {
  RandomWeyl rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    RandomSpec spec;
    spec.n = 1 + trial % 2;
    spec.normalized = false;
    spec.max_degree = 2;
    const auto c = rng.chain(spec, 2 + trial % 2);
    const auto nc = normalize_chain(c);
    ASSERT_EQ(normalize_chain(nc), nc);
    // d preserves the degenerate subcomplex, so N d = N d N.
    ASSERT_EQ(normalize_chain(hochschild_boundary(c)), normalize_chain(hochschild_boundary(nc)));
  }
}
