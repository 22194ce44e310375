#pragma once

#include "weylver/hochschild.hpp"
#include "weylver/tau.hpp"

#include <functional>
#include <string>
#include <vector>

namespace weylver {

/// N x N matrix with entries in the Weyl algebra, an element of gl_N(A).
class GlWeylElement {
 public:
  GlWeylElement() = default;
  GlWeylElement(int n, int N);

  /// 1 (x) a, the identity matrix times a.
  static GlWeylElement scalar(int N, const WeylElement& a);
  /// E_rs (x) a (0-based r, s).
  static GlWeylElement elementary(int N, int r, int s, const WeylElement& a);
  /// M (x) 1 for a constant matrix.
  static GlWeylElement constant(int n, const std::vector<std::vector<EpsScalar>>& m);

  int n() const { return n_; }
  int N() const { return N_; }
  const WeylElement& operator()(int r, int s) const { return entries_[r * N_ + s]; }
  WeylElement& operator()(int r, int s) { return entries_[r * N_ + s]; }
  bool is_zero() const;

  /// Embedding into gl_{N'} in the upper-left block.
  GlWeylElement padded(int N_prime) const;

  GlWeylElement& operator+=(const GlWeylElement& other);
  GlWeylElement& operator-=(const GlWeylElement& other);
  GlWeylElement& operator*=(const EpsScalar& c);
  friend GlWeylElement operator+(GlWeylElement a, const GlWeylElement& b) { return a += b; }
  friend GlWeylElement operator-(GlWeylElement a, const GlWeylElement& b) { return a -= b; }
  friend GlWeylElement operator*(GlWeylElement a, const EpsScalar& c) { return a *= c; }
  friend bool operator==(const GlWeylElement&, const GlWeylElement&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  int N_ = 0;
  std::vector<WeylElement> entries_;
};

/// Matrix product with Moyal products of the entries.
GlWeylElement product(const GlWeylElement& x, const GlWeylElement& y);

/// Lie bracket of gl_N(A): (XY - YX) / eps. On 1 (x) A it is the eps-bracket,
/// so sp_2n = {1 (x) A~} and gl_N (x) 1 are Lie subalgebras.
GlWeylElement lie_bracket(const GlWeylElement& x, const GlWeylElement& y);

/// Arguments a_1 ^ .. ^ a_k of a Lie cochain, in order.
using WedgeTuple = std::vector<GlWeylElement>;

/// Linear functional on Hochschild chains of a fixed degree.
using HochschildCochain = std::function<EpsScalar(const ChainTensor&)>;
/// p-cochain with values in the coadjoint module gl_N(A)^*: args, then target.
using DualCochain = std::function<EpsScalar(const WedgeTuple&, const GlWeylElement&)>;
/// p-cochain with trivial coefficients.
using ScalarCochain = std::function<EpsScalar(const WedgeTuple&)>;

/// (d c)(a_1 .. a_{p+1})(x) = sum_i (-1)^{i-1} (a_i . c(.. a_i^ ..))(x)
///                          + sum_{i<j} (-1)^{i+j} c([a_i, a_j], .. a_i^ .. a_j^ ..)(x),
/// with the coadjoint action (a . xi)(x) = -xi([a, x]).
EpsScalar d_lie_eval(const DualCochain& c, const WedgeTuple& args, const GlWeylElement& target);

/// Trivial coefficients: only the bracket-insertion sum.
EpsScalar d_lie_eval(const ScalarCochain& c, const WedgeTuple& args);

/// (c u c')(a_1 .. a_{p+q}) as the signed sum over (p,q)-shuffles.
EpsScalar cup_product(const ScalarCochain& c, int p, const ScalarCochain& c_prime, int q,
                      const WedgeTuple& args);

/// phi^N(tau)(M_1 a_1, .., M_k a_k)(M_0 a_0)
///   = sum_sigma sign(sigma) tau(a_0 (x) a_sigma(1) ..) tr(M_0 M_sigma(1) ..),
/// extended multilinearly over the matrix entries. All terms are collected in
/// one chain so that tau is called once.
EpsScalar phi_n_apply(const HochschildCochain& tau, const WedgeTuple& args, const GlWeylElement& target);

/// The Hochschild chain that phi_n_apply feeds to tau.
ChainTensor phi_n_chain(const WedgeTuple& args, const GlWeylElement& target);

/// Theta^N_2n = phi^N(tau_2n).
EpsScalar theta_eval(int n, const WedgeTuple& args, const GlWeylElement& target,
                     const TauOptions& options = {});

/// Horizontal section of the flat connection of the basic example through a
/// polynomial f in x: f^(y) = f(x + y). f uses the same variable layout as
/// Weyl elements (x_{2i-1} with p_i, x_{2i} with q_i).
WeylElement horizontal_jet(const WeylElement& f, const std::vector<Rational>& x);

/// Coefficient of dq_1 ^ dp_1 ^ .. ^ dq_n ^ dp_n in
///   psi(f) = ((-1)^n / (2n)!) Theta_2n(A ^ .. ^ A)(f^_x)
/// for the basic example A = sum_j A_j dx_j, A_j = sum_i omega_ij y_i, so
/// A_{2i-1} = q_i and A_{2i} = -p_i. Expanding the wedge gives
/// sum_sigma sign(sigma) Theta(A_sigma(1) ..) dx_1 ^ .. ^ dx_2n, and
/// dx_1 ^ .. ^ dx_2n = (-1)^n dq ^ dp since each dp_i ^ dq_i = -dq_i ^ dp_i.
EpsScalar flat_trace_density(int n, const WeylElement& f, const std::vector<Rational>& x);

}  // namespace weylver
