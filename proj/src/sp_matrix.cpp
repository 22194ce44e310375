#include "weylver/sp_matrix.hpp"

namespace weylver {

EpsSpMatrix to_eps(const SpMatrix& a) {
  EpsMatrix m(a.matrix().rows(), a.matrix().cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = EpsScalar(a.matrix()(i, j));
  return EpsSpMatrix(a.n(), m);
}

namespace {

template <typename Scalar>
WeylElement quadratic_from_lowered(int n, const MatrixX<Scalar>& low) {
  WeylElement out(n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      Exponents e(2 * n, 0);
      e[i] += 1;
      e[j] += 1;
      out.add_term(e, EpsScalar(low(i, j)) * make_rational(1, 2));
    }
  return out;
}

}  // namespace

WeylElement sp_to_quadratic(const SpMatrix& a) {
  return quadratic_from_lowered(a.n(), a.lowered());
}

WeylElement sp_to_quadratic(const EpsSpMatrix& a) {
  return quadratic_from_lowered(a.n(), a.lowered());
}

EpsSpMatrix quadratic_to_sp(const WeylElement& quadratic) {
  const int n = quadratic.n();
  EpsMatrix s = EpsMatrix::Constant(2 * n, 2 * n, EpsScalar());
  for (const auto& [e, c] : quadratic.terms()) {
    std::vector<int> vars;
    for (int v = 0; v < 2 * n; ++v)
      for (int k = 0; k < e[v]; ++k) vars.push_back(v);
    if (vars.size() != 2) continue;
    if (vars[0] == vars[1]) {
      s(vars[0], vars[0]) += c * Rational(2);
    } else {
      s(vars[0], vars[1]) += c;
      s(vars[1], vars[0]) += c;
    }
  }
  return EpsSpMatrix::from_lowered(n, s);
}

WeylElement sp_action(const SpMatrix& a, const WeylElement& f) {
  const int n = a.n();
  if (f.n() != n) throw std::invalid_argument("sp_action dimension mismatch");
  WeylElement out(n);
  for (int i = 0; i < 2 * n; ++i) {
    const WeylElement di = partial_derivative(f, i);
    if (di.is_zero()) continue;
    for (int j = 0; j < 2 * n; ++j) {
      if (a.matrix()(i, j) == 0) continue;
      out -= di.commutative_product(WeylElement::variable(n, j)) * EpsScalar(a.matrix()(i, j));
    }
  }
  return out;
}

SpMatrix sp_diagonal(const std::vector<Rational>& t) {
  const int n = static_cast<int>(t.size());
  RationalMatrix m = RationalMatrix::Constant(2 * n, 2 * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    m(2 * i, 2 * i) = t[i];
    m(2 * i + 1, 2 * i + 1) = -t[i];
  }
  return SpMatrix(n, m);
}

}  // namespace weylver
