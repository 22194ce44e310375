#pragma once

#include "weylver/upolynomial.hpp"

#include <vector>

namespace weylver {

/// The region {0 <= u_{order[0]} <= u_{order[1]} <= ... <= 1} of the cube
/// [0,1]^k (0-based variable indices), with an orientation sign applied to
/// integrals over it.
struct OrderedRegion {
  int k = 0;
  std::vector<int> order;
  int orientation = 1;

  static OrderedRegion standard(int k);
  /// Validates that `order` is a bijection of 0..k-1.
  static OrderedRegion from_order(std::vector<int> order, int orientation = 1);

  /// Position of variable i in the ordering.
  std::vector<int> ranks() const;
};

/// Exact value of the integral of prod u_i^{m_i} over 0 <= u_1 <= ... <= u_k <= 1:
/// prod_{i=1}^k 1 / (m_1 + ... + m_i + i).
Rational simplex_monomial_integral(const std::vector<int>& exponents);

/// Integral of p over the region, times the region's orientation.
EpsScalar integrate_over_region(const UPolynomial& p, const OrderedRegion& region);

/// Integral of p over [0,1]^k computed monomial by monomial.
EpsScalar integrate_over_cube(const UPolynomial& p);

/// Integral of p over [0,1]^k as the sum over all k! ordering regions.
EpsScalar integrate_over_cube_by_regions(const UPolynomial& p);

/// The affine branch of psi(u_a - u_b) on a region where the sign of u_a - u_b
/// is known: 2(u_a - u_b) + 1 when u_a < u_b and 2(u_a - u_b) - 1 otherwise.
/// A variable index of -1 stands for the constant 0 (it precedes everything).
UPolynomial psi_branch(int k, int a, int b, bool a_before_b);

/// I_j: integral over [0,1]^j of psi(u_1-u_2) psi(u_2-u_3) ... psi(u_j-u_1),
/// computed exactly by summing the affine branches over the j! ordering regions.
Rational psi_cycle_integral(int j);

/// Closed form of I_j: 0 for odd j, -B_j 2^j / j! for even j.
Rational closed_form_I(int j);

}  // namespace weylver
