#include "weylver/chern_weil.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace weylver;

namespace {

WeylElement p(int i, int n) { return WeylElement::p(n, i); }
WeylElement q(int i, int n) { return WeylElement::q(n, i); }

// Oracle for (x/2)/sinh(x/2) = x e^{x/2} / (e^x - 1): Cauchy product of the
// Bernoulli series sum B_k x^k / k! with exp(x/2).
std::vector<Rational> ahat_oracle(int degree) {
  std::vector<Rational> out(degree + 1, Rational(0));
  for (int d = 0; d <= degree; ++d)
    for (int k = 0; k <= d; ++k) {
      Rational half(1);
      for (int i = 0; i < d - k; ++i) half /= 2;
      out[d] += bernoulli(k) / factorial(k) * half / factorial(d - k);
    }
  return out;
}

// Coefficient of x^j in prod_i f(t_i x).
Rational product_coefficient(const std::vector<Rational>& f, const std::vector<Rational>& t, int j) {
  std::vector<Rational> acc(j + 1, Rational(0));
  acc[0] = 1;
  for (const auto& ti : t) {
    std::vector<Rational> next(j + 1, Rational(0));
    for (int a = 0; a <= j; ++a) {
      Rational tp(1);
      for (int b = 0; a + b <= j; ++b) {
        next[a + b] += acc[a] * f[b] * tp;
        tp *= ti;
      }
    }
    acc = next;
  }
  return acc[j];
}

Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return make_rational(num(rng), den(rng));
}

CartanPoint random_cartan(std::mt19937& rng, int m, int N) {
  CartanPoint x;
  for (int i = 0; i < m; ++i) x.t.push_back(small_rational(rng));
  for (int r = 0; r < N; ++r) x.s.push_back(EpsScalar(small_rational(rng)));
  return x;
}

HElement random_h(std::mt19937& rng, int n, int N) {
  WeylElement quad(n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i; j < 2 * n; ++j) {
      Exponents e(2 * n, 0);
      ++e[i];
      ++e[j];
      quad.add_term(e, EpsScalar(small_rational(rng)));
    }
  HElement x = HElement::zero(n, N);
  x.sp = quadratic_to_sp(quad);
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s) x.gl(r, s) = small_rational(rng);
  return x;
}

const SpecialVector& find(const std::vector<SpecialVector>& all, const std::string& label) {
  for (const auto& v : all)
    if (v.label == label) return v;
  throw std::invalid_argument(label);
}

}  // namespace

// Values from log A^ = -sum B_2k/(4k (2k)!) tr X^2k. Frozen after comparison
// with the eigenvalue oracle below.
TEST(Ahat, TraceCoefficients) {
  const auto c = ahat_trace_coefficients(4);
  EXPECT_EQ(c.at({0, 0}), Rational(1));
  EXPECT_EQ(c.at({1, 0}), make_rational(-1, 48));
  EXPECT_EQ(c.at({0, 1}), make_rational(1, 5760));
  EXPECT_EQ(c.at({2, 0}), make_rational(1, 4608));
  EXPECT_EQ(c.size(), 4u);
}

TEST(Ahat, MatchesEigenvalueOracle) {
  std::mt19937 rng(71);
  const auto f = ahat_oracle(8);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 1 + trial % 3;
    CartanPoint x = random_cartan(rng, m, 1);
    x.s[0] = 0;
    for (int j = 0; j <= 8; j += 2) {
      const EpsScalar expected = EpsScalar::monomial(j, product_coefficient(f, x.t, j));
      ASSERT_EQ(ahat_ch_component(j).evaluate(x.to_h()), expected) << "j=" << j;
    }
  }
}

TEST(Ahat, ChernCharacterPart) {
  CartanPoint x{{}, {EpsScalar(2), EpsScalar(make_rational(-1, 3))}};
  EXPECT_EQ(ahat_ch_component(0).evaluate(x.to_h()), EpsScalar(2));
  EXPECT_EQ(ahat_ch_component(1).evaluate(x.to_h()), EpsScalar(make_rational(5, 3)));
  EXPECT_EQ(ahat_ch_component(2).evaluate(x.to_h()), EpsScalar(Rational(2) + make_rational(1, 18)));
}

TEST(InvariantPoly, ConjugationInvariance) {
  std::mt19937 rng(72);
  // Symplectic matrices on (p_1, q_1, p_2, q_2): a rotation in the first plane
  // and a shear q_2 += p_2.
  RationalMatrix rot = RationalMatrix::Identity(4, 4), rot_inv = RationalMatrix::Identity(4, 4);
  rot(0, 0) = rot(1, 1) = make_rational(3, 5);
  rot(0, 1) = make_rational(-4, 5);
  rot(1, 0) = make_rational(4, 5);
  rot_inv = rot.transpose();
  RationalMatrix shear = RationalMatrix::Identity(4, 4), shear_inv = RationalMatrix::Identity(4, 4);
  shear(3, 2) = 1;
  shear_inv(3, 2) = -1;
  const RationalMatrix g = rot * shear, g_inv = shear_inv * rot_inv;
  EpsMatrix ge(4, 4), ge_inv(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      ge(i, j) = g(i, j);
      ge_inv(i, j) = g_inv(i, j);
    }
  EpsMatrix perm = EpsMatrix::Constant(2, 2, EpsScalar(0)), upper = EpsMatrix::Identity(2, 2),
            upper_inv = EpsMatrix::Identity(2, 2);
  perm(0, 1) = perm(1, 0) = 1;
  upper(0, 1) = 3;
  upper_inv(0, 1) = -3;
  for (int trial = 0; trial < 6; ++trial) {
    const HElement x = random_h(rng, 2, 2);
    HElement y = x;
    y.sp = EpsSpMatrix(2, EpsMatrix(ge * x.sp.matrix() * ge_inv));
    y.gl = EpsMatrix(upper * perm * x.gl * perm * upper_inv);
    for (int j = 1; j <= 4; ++j) ASSERT_EQ(ahat_ch_component(j).evaluate(y), ahat_ch_component(j).evaluate(x));
  }
}

TEST(InvariantPoly, PolarizationDiagonal) {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 5; ++trial) {
    const HElement x = random_h(rng, 1, 2), y = random_h(rng, 1, 2);
    for (int j = 1; j <= 3; ++j) {
      const auto P = ahat_ch_component(j);
      ASSERT_EQ(polarize(P, std::vector<HElement>(j, x)), P.evaluate(x) * factorial(j));
    }
    const auto P2 = ahat_ch_component(2);
    ASSERT_EQ(polarize(P2, {x, y}), polarize(P2, {y, x}));
    ASSERT_EQ(polarize(P2, {x + y, y}), polarize(P2, {x, y}) + polarize(P2, {y, y}));
  }
}

TEST(Curvature, SpecialVectorExamples) {
  const int n = 2, N = 2;
  const auto all = special_vectors(n, N);
  const auto P1 = GlWeylElement::scalar(N, p(1, n));
  const auto u12 = find(all, "u12").value;
  EXPECT_EQ(lie_bracket(P1, u12), GlWeylElement::scalar(N, q(2, n).commutative_product(p(2, n))));
  EXPECT_EQ(find(all, "u12").dq, GlWeylElement::scalar(N, q(2, n).commutative_product(p(2, n))));

  HElement expected = HElement::zero(n, N);
  expected.sp = quadratic_to_sp(-(q(1, n).commutative_product(p(1, n))));
  EXPECT_EQ(curvature_C(P1, find(all, "u11").value), expected);
  expected.sp = quadratic_to_sp(-(q(2, n).commutative_product(p(1, n))));
  EXPECT_EQ(curvature_C(P1, find(all, "u21").value), expected);

  HElement e11 = HElement::zero(n, N);
  e11.gl(0, 0) = -1;
  EXPECT_EQ(curvature_C(P1, find(all, "v11").value), e11);
}

TEST(Curvature, VanishesOnH) {
  std::mt19937 rng(74);
  RandomWeyl weyl(74);
  for (int trial = 0; trial < 8; ++trial) {
    const HElement x = random_h(rng, 1, 2), y = random_h(rng, 1, 2);
    ASSERT_TRUE(curvature_C(to_gl(x), to_gl(y)).is_zero());
    ASSERT_EQ(project_pr(to_gl(x)), x);
    // pr is h-equivariant, so C(h, .) = 0.
    GlWeylElement v(1, 2);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) v(r, s) = weyl.element(1, 0, 3, 2, 0, 0);
    ASSERT_TRUE(curvature_C(to_gl(x), v).is_zero());
  }
}

TEST(Chi, DegreeOneExample) {
  const auto all = special_vectors(1, 1);
  const WedgeTuple args{GlWeylElement::scalar(1, p(1, 1)), find(all, "v11").value};
  EXPECT_EQ(-chi_eval(ahat_ch_component(1), args), EpsScalar(1));
}

TEST(GraphSum, CombinatorialFactor) {
  EXPECT_EQ(comb_factor({2, 0}), Rational(1));
  EXPECT_EQ(comb_factor({0, 1}), make_rational(1, 2));
  EXPECT_EQ(comb_factor({1, 0, 1}), Rational(4));
  EXPECT_EQ(comb_factor({0, 0, 0, 1}), Rational(3));
}

TEST(GraphSum, DegreeTwo) {
  CartanPoint x{{Rational(2), Rational(3)}, {EpsScalar(5)}};
  // -N eps^2 sum t^2 / 12 + sum s^2
  EXPECT_EQ(p_n_cartan_graphsum(2, x), EpsScalar::monomial(2, make_rational(-13, 12)) + EpsScalar(25));
}

TEST(GraphSum, EqualsAhatCh) {
  std::mt19937 rng(75);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 1 + trial % 2, N = 1 + trial % 3;
    const CartanPoint x = random_cartan(rng, m, N);
    for (int k = 1; k <= 5; ++k)
      ASSERT_EQ(p_n_cartan_graphsum(k, x), ahat_ch_component(k).evaluate(x.to_h()) * factorial(k)) << k;
  }
}

TEST(GraphSum, EqualsCubeIntegral) {
  std::mt19937 rng(76);
  EXPECT_EQ(p_n_cartan_integral(1, {GlWeylElement::elementary(1, 0, 0, WeylElement(1, 1))}), EpsScalar(1));
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + trial % 3, N = 1 + trial % 2;
    const CartanPoint x = random_cartan(rng, n, N);
    ASSERT_EQ(p_n_cartan_integral(n, std::vector<GlWeylElement>(n, x.to_gl(n))), p_n_cartan_graphsum(n, x));
  }
}

TEST(GraphSum, RejectsNonCartan) {
  EXPECT_THROW(p_n_cartan_integral(1, {GlWeylElement::scalar(1, p(1, 1))}), std::invalid_argument);
  EXPECT_THROW(p_n_cartan_integral(1, {GlWeylElement::elementary(2, 0, 1, WeylElement(1, 1))}),
               std::invalid_argument);
}

TEST(Genfun, SeriesAgree) {
  for (int m : {1, 2})
    for (int N : {1, 2}) {
      const auto report = genfun_check(6, m, N);
      EXPECT_TRUE(report.pass) << report.graph_series.to_string() << " vs " << report.product_series.to_string();
    }
}

TEST(Rrh, Examples) {
  const auto one = special_vectors(1, 1);
  const auto c1 = rrh_check(1, 1, {find(one, "v11")});
  EXPECT_EQ(c1.lhs, EpsScalar(1));
  EXPECT_TRUE(c1.pass);
  EXPECT_TRUE(rrh_check(1, 1, {find(one, "u11")}).lhs.is_zero());

  const auto two = special_vectors(2, 1);
  const auto c2 = rrh_check(2, 1, {find(two, "u11"), find(two, "u21")});
  EXPECT_EQ(c2.lhs, EpsScalar::monomial(2, make_rational(-1, 12)));
  EXPECT_TRUE(c2.pass) << c2.chi_rhs << " " << c2.polar_rhs << " " << c2.integral_rhs;
  const auto c3 = rrh_check(2, 1, {find(two, "v11"), find(two, "v21")});
  EXPECT_EQ(c3.lhs, EpsScalar(1));
  EXPECT_TRUE(c3.pass);
}

TEST(Rrh, AllAdmissibleTuples) {
  for (int N : {1, 2}) {
    const auto tuples = admissible_tuples(2, N);
    EXPECT_EQ(tuples.size(), static_cast<std::size_t>((1 + N) * (2 + N)));
    for (const auto& t : tuples) {
      const auto c = rrh_check(2, N, t);
      ASSERT_TRUE(c.pass) << t[0].label << " " << t[1].label << ": " << c.lhs << " " << c.chi_rhs << " "
                          << c.polar_rhs << " " << c.integral_rhs;
    }
  }
}
