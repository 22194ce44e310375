#pragma once

#include "weylver/lie.hpp"
#include "weylver/sp_matrix.hpp"
#include "weylver/upolynomial.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace weylver {

/// X = X_1 + X_2 in h = sp_2n + gl_N. The sp part carries EpsScalar entries
/// because pr_1 keeps the eps-dependence of quadratic coefficients.
struct HElement {
  EpsSpMatrix sp;
  EpsMatrix gl;

  static HElement zero(int n, int N);
  int n() const { return sp.n(); }
  int N() const { return static_cast<int>(gl.rows()); }
  bool is_zero() const;

  friend HElement operator+(const HElement& a, const HElement& b);
  friend HElement operator-(const HElement& a, const HElement& b);
  friend HElement operator*(const EpsScalar& c, const HElement& a);
  friend bool operator==(const HElement& a, const HElement& b);
  std::string to_string() const;
};

/// Bracket of h as a subalgebra of gl_N(A): the sp parts commute as matrices
/// (A -> A~ is a homomorphism to the eps-bracket), the gl parts as (XY - YX)/eps.
HElement h_bracket(const HElement& a, const HElement& b);

/// Embedding h -> gl_N(A): 1 (x) A~ + M (x) 1.
GlWeylElement to_gl(const HElement& x);

/// X = -sum t_i q_i p_i + sum s_r E_rr.
struct CartanPoint {
  std::vector<Rational> t;
  std::vector<EpsScalar> s;

  HElement to_h() const;
  GlWeylElement to_gl(int n) const;
};

/// Homogeneous degree-j invariant function on h, given by its evaluator.
struct InvariantPoly {
  int degree = 0;
  std::function<EpsScalar(const HElement&)> evaluate;
};

/// pr_1(M (x) a) = (1/N) tr(M) a_2 in sp_2n, pr_2(M (x) a) = M a_0.
HElement project_pr(const GlWeylElement& v);

/// C(v, w) = [pr v, pr w] - pr [v, w].
HElement curvature_C(const GlWeylElement& v, const GlWeylElement& w);

/// The symmetric j-linear form whose diagonal is j! P(Y):
///   P(Y_1, .., Y_j) = sum_{S subset {1..j}} (-1)^{j-|S|} P(sum_{i in S} Y_i).
/// With this normalization sum_j P_j(X, .., X)/j! is the Taylor series.
EpsScalar polarize(const InvariantPoly& p, const std::vector<HElement>& ys);

/// Coefficients of A^(X) = det((X/2)/sinh(X/2))^{1/2} in the power sums
/// T_k = tr(X^{2k}), up to X-degree `degree`:
///   A^(X) = exp(-sum_k B_2k / (4k (2k)!) T_k).
/// Keys list the multiplicity of each T_k (index k-1).
std::map<std::vector<int>, Rational> ahat_trace_coefficients(int degree);

/// Degree-j part of A^_eps(X_1) Ch(X_2) = A^(eps X_1) tr exp(X_2).
InvariantPoly ahat_ch_component(int j);

/// chi(P)(v_1 ^ .. ^ v_2q) = (1/q!) sum' sign(sigma) P(C(v_s1, v_s2), .., C(v_s(2q-1), v_s(2q)))
/// over sigma with sigma(2i-1) < sigma(2i), P polarized.
EpsScalar chi_eval(const InvariantPoly& p, const WedgeTuple& args);

/// u_ij = q_i^2 p_i / 2 (i = j) or q_i q_j p_j, and v_ir = E_rr q_i (1-based labels).
struct SpecialVector {
  std::string label;
  int i = 0;
  GlWeylElement value;
  /// d value / d q_i, an element of h.
  GlWeylElement dq;
};

std::vector<SpecialVector> special_vectors(int n, int N);

/// Choices v_j in {u_jk : k <= j} and {v_jr} for j = 1..n.
std::vector<std::vector<SpecialVector>> admissible_tuples(int n, int N);

/// C_l = n! / (l_1! prod_{j>=2} l_j! (2j)^{l_j}) with n = sum j l_j; l[0] is l_1.
Rational comb_factor(const std::vector<int>& l);

/// P_n(X, .., X) from the graph-cycle sum, as a polynomial in t_1..t_m, s_1..s_N
/// (variables in that order).
UPolynomial p_n_graphsum_polynomial(int n, int m, int N);

EpsScalar p_n_cartan_graphsum(int n, const CartanPoint& x);

/// tr(M_1 .. M_n) mu_n int_{[0,1]^n} prod_{i<j} exp(eps psi(u_i - u_j) alpha_ij)(a_1 (x) .. (x) a_n),
/// extended multilinearly. Arguments must lie in the Cartan span of 1 (x) q_i p_i and E_rr (x) 1.
EpsScalar p_n_cartan_integral(int n, const std::vector<GlWeylElement>& args);

struct RrhCase {
  std::vector<std::string> labels;
  EpsScalar lhs;       // ev_1 Theta_2n(p_1 ^ v_1 ^ .. ^ p_n ^ v_n) from the tau integral
  EpsScalar chi_rhs;   // (-1)^n chi((A^_eps Ch)_n) on the same wedge
  EpsScalar polar_rhs; // P_n(d v_1/d q_1, .., d v_n/d q_n), P_n the polarized (A^_eps Ch)_n
  EpsScalar integral_rhs; // the same P_n from the cube integral
  bool pass = false;
};

RrhCase rrh_check(int n, int N, const std::vector<SpecialVector>& tuple, const TauOptions& options = {});

struct GenfunReport {
  UPolynomial graph_series;
  UPolynomial product_series;
  bool pass = false;
};

/// Compares sum_{k<=max_n} P_k(X, .., X)/k! from the graph sums with the Taylor
/// expansion of prod_i (eps t_i/2)/sinh(eps t_i/2) sum_r exp(s_r), obtained by
/// power-series division, in t_1..t_m, s_1..s_N up to total degree max_n.
GenfunReport genfun_check(int max_n, int m, int N);

}  // namespace weylver
