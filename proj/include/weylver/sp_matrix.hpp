#pragma once

#include "weylver/weyl_element.hpp"

#include <Eigen/Core>

#include <stdexcept>

namespace weylver {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = MatrixX<Rational>;
using EpsMatrix = MatrixX<EpsScalar>;

/// The standard symplectic form in y-coordinates (y_{2i-1} = p_i, y_{2i} = q_i):
/// omega(2i, 2i-1) = +1, omega(2i-1, 2i) = -1 (1-based), all other entries 0.
template <typename Scalar>
MatrixX<Scalar> symplectic_form(int n) {
  MatrixX<Scalar> w = MatrixX<Scalar>::Constant(2 * n, 2 * n, Scalar(0));
  for (int i = 0; i < n; ++i) {
    w(2 * i + 1, 2 * i) = Scalar(1);
    w(2 * i, 2 * i + 1) = Scalar(-1);
  }
  return w;
}

/// Element A = (a^i_j) of sp_2n: the lowered matrix a_ij = sum_k omega_ik a^k_j
/// is symmetric. Scalar is Rational for genuine symplectic matrices and
/// EpsScalar for the K-linear span used by the Chern-Weil projection.
template <typename Scalar>
class BasicSpMatrix {
 public:
  BasicSpMatrix() = default;

  /// Validates the sp condition; throws std::invalid_argument on violation.
  BasicSpMatrix(int n, MatrixX<Scalar> a) : n_(n), a_(std::move(a)) {
    if (a_.rows() != 2 * n || a_.cols() != 2 * n)
      throw std::invalid_argument("SpMatrix must be 2n x 2n");
    const MatrixX<Scalar> low = lowered();
    for (int i = 0; i < 2 * n; ++i)
      for (int j = i + 1; j < 2 * n; ++j)
        if (!(low(i, j) == low(j, i)))
          throw std::invalid_argument("matrix violates the sp_2n symmetry condition");
  }

  static BasicSpMatrix zero(int n) {
    return BasicSpMatrix(n, MatrixX<Scalar>::Constant(2 * n, 2 * n, Scalar(0)));
  }

  /// Recovers A from a symmetric lowered matrix: A = omega^{-1} S = -omega S.
  static BasicSpMatrix from_lowered(int n, const MatrixX<Scalar>& s) {
    MatrixX<Scalar> a = symplectic_form<Scalar>(n) * s;
    return BasicSpMatrix(n, -a);
  }

  int n() const { return n_; }
  const MatrixX<Scalar>& matrix() const { return a_; }
  MatrixX<Scalar> lowered() const { return symplectic_form<Scalar>(n_) * a_; }
  bool is_zero() const {
    for (int i = 0; i < a_.rows(); ++i)
      for (int j = 0; j < a_.cols(); ++j)
        if (!(a_(i, j) == Scalar(0))) return false;
    return true;
  }

  friend BasicSpMatrix operator+(const BasicSpMatrix& x, const BasicSpMatrix& y) {
    return BasicSpMatrix(x.n_, MatrixX<Scalar>(x.a_ + y.a_), unchecked{});
  }
  friend BasicSpMatrix operator-(const BasicSpMatrix& x, const BasicSpMatrix& y) {
    return BasicSpMatrix(x.n_, MatrixX<Scalar>(x.a_ - y.a_), unchecked{});
  }
  friend BasicSpMatrix operator*(const Scalar& c, const BasicSpMatrix& x) {
    return BasicSpMatrix(x.n_, MatrixX<Scalar>(x.a_ * c), unchecked{});
  }
  friend bool operator==(const BasicSpMatrix& x, const BasicSpMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

  /// Matrix commutator AB - BA.
  friend BasicSpMatrix commutator(const BasicSpMatrix& x, const BasicSpMatrix& y) {
    return BasicSpMatrix(x.n_, MatrixX<Scalar>(x.a_ * y.a_ - y.a_ * x.a_), unchecked{});
  }

 private:
  struct unchecked {};
  BasicSpMatrix(int n, MatrixX<Scalar> a, unchecked) : n_(n), a_(std::move(a)) {}

  int n_ = 0;
  MatrixX<Scalar> a_;
};

using SpMatrix = BasicSpMatrix<Rational>;
using EpsSpMatrix = BasicSpMatrix<EpsScalar>;

EpsSpMatrix to_eps(const SpMatrix& a);

/// A~ = 1/2 sum_ij a_ij y_i y_j.
WeylElement sp_to_quadratic(const SpMatrix& a);
WeylElement sp_to_quadratic(const EpsSpMatrix& a);

/// Inverse of sp_to_quadratic on homogeneous quadratics (other degrees are
/// ignored; callers pass the degree-2 part).
EpsSpMatrix quadratic_to_sp(const WeylElement& quadratic);

/// Af(y) = d/dt f(exp(-tA) y) at t = 0, computed from the chain rule:
/// Af = -sum_{i,j} A^i_j y_j d_i f.
WeylElement sp_action(const SpMatrix& a, const WeylElement& f);

/// Diagonal element diag(t_1, -t_1, ..., t_n, -t_n) in (p, q) order.
SpMatrix sp_diagonal(const std::vector<Rational>& t);

}  // namespace weylver
