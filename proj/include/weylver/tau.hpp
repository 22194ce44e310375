#pragma once

#include "weylver/hochschild.hpp"
#include "weylver/integrate.hpp"
#include "weylver/upolynomial.hpp"

#include <map>
#include <utility>
#include <vector>

namespace weylver {

/// alpha_ij = -alpha_ji acting on slots i and j (0-based, i != j):
/// 1/2 sum_r (d_{p_r} a_i (x) d_{q_r} a_j - d_{q_r} a_i (x) d_{p_r} a_j).
ChainTensor alpha_apply(const ChainTensor& c, int i, int j);

/// pi_2n(a_0 (x) ... (x) a_2n) = sum_sigma sign(sigma) a_0 (x) d_{y_sigma(1)} a_1 (x) ...
ChainTensor pi_apply(const ChainTensor& c);

/// mu(a_0 (x) ... (x) a_k) = a_0(0) ... a_k(0), extended linearly.
EpsScalar mu_apply(const ChainTensor& c);

/// Weights of the pair exponentials exp(eps w(a,b) alpha_ab) for slots
/// 0..slots-1, affine in the integration variables. w(b,a) = -w(a,b).
class PairWeights {
 public:
  PairWeights(int slots, int u_vars);

  /// Slot s sits at u-variable slot_var[s] (or at the constant 0 when -1),
  /// and every pair uses the branch of psi(u_a - u_b) valid on `region`.
  static PairWeights psi_on_region(const std::vector<int>& slot_var, const OrderedRegion& region);

  int slots() const { return slots_; }
  int u_vars() const { return u_vars_; }
  const UPolynomial& operator()(int a, int b) const { return w_[a * slots_ + b]; }
  void set(int a, int b, const UPolynomial& w);

 private:
  int slots_;
  int u_vars_;
  std::vector<UPolynomial> w_;
};

/// Evaluates mu prod_{a<b} exp(eps w(a,b) alpha_ab) on basis tuples as a
/// polynomial in the u-variables.
///
/// Expanding every alpha_ab into its d_p (x) d_q contractions, mu keeps only
/// the terms where each slot is differentiated down to a constant. For each
/// index r this is a nonnegative integer matrix N^r (zero diagonal) whose row
/// sums are the p_r-exponents and column sums the q_r-exponents of the slots;
/// the term weighs prod (eps w(a,b)/2)^N_ab / N_ab! times the falling
/// factorials of the derivatives. The sum over such tables is cached per
/// (row sums, column sums) signature.
class PairingKernel {
 public:
  explicit PairingKernel(PairWeights weights);

  UPolynomial integrand(const MonomialTuple& tuple);
  const PairWeights& weights() const { return weights_; }

 private:
  const UPolynomial& signature_sum(const std::vector<int>& rows, const std::vector<int>& cols);
  const UPolynomial& weight_power(int a, int b, int k);

  PairWeights weights_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, UPolynomial> cache_;
  std::map<std::tuple<int, int, int>, UPolynomial> powers_;
};

struct TauOptions {
  /// Recomputes every evaluation through explicit operator exponentials in
  /// two different pair orders and throws std::logic_error on disagreement.
  bool verify_operator_order = false;
};

/// tau_2n(c) = mu int_{Delta_2n} prod_{0<=i<j<=2n} exp(eps(2u_i - 2u_j + 1) alpha_ij) pi_2n(c),
/// u_0 = 0.
EpsScalar tau_eval(int n, const ChainTensor& c, const TauOptions& options = {});

/// The permuted variant: same pipeline with psi(u_i - u_j) branches on the
/// region {u_{sigma^-1(1)} <= ... <= u_{sigma^-1(2n)}} and the plain measure.
/// `sigma` is a 0-based permutation of 0..2n-1. With this convention
/// tau(a_0 (x) a_{sigma^-1(1)} (x) ...) = sign(sigma) tau_sigma(a_0 (x) a_1 (x) ...).
EpsScalar tau_sigma_eval(int n, const std::vector<int>& sigma, const ChainTensor& c,
                         const TauOptions& options = {});

/// Evaluation through explicit Taylor expansion of the pair exponentials,
/// applied as operators in the given pair order. Slower than the kernel.
EpsScalar tau_eval_by_operators(int n, const ChainTensor& c,
                                const std::vector<std::pair<int, int>>& pair_order);

/// Taylor coefficients F_abc of the n = 1 generating function
///   F(x,y,z) = -((x-y)e^{x+y-z} + (y-z)e^{y+z-x} + (z-x)e^{z+x-y}) / (4(x-y)(y-z)(z-x))
/// up to total degree `order`, as a polynomial in (x, y, z). The removable
/// singularities are handled by exact polynomial division of the numerator's
/// expansion. Memoized.
UPolynomial closed_form_taylor(int order = 12);

/// tau_2 = mu_2 F(eps alpha_01, eps alpha_12, eps alpha_20) pi_2.
EpsScalar tau_closed_form_n1(const ChainTensor& c);

}  // namespace weylver
