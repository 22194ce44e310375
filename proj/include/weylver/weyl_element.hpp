#pragma once

#include "weylver/eps_scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weylver {

/// Exponent vector of a monomial in y_1..y_2n. Index 2(i-1) holds the
/// exponent of p_i and index 2(i-1)+1 the exponent of q_i.
using Exponents = std::vector<int>;

inline int p_index(int i) { return 2 * (i - 1); }
inline int q_index(int i) { return 2 * (i - 1) + 1; }

/// Element of the polynomial Weyl algebra: a polynomial in p_1..p_n, q_1..q_n
/// with EpsScalar coefficients. Zero coefficients are never stored.
class WeylElement {
 public:
  using TermMap = std::map<Exponents, EpsScalar>;

  WeylElement() = default;
  explicit WeylElement(int n) : n_(n) {}
  WeylElement(int n, const EpsScalar& constant);

  static WeylElement monomial(int n, const Exponents& e, const EpsScalar& c = EpsScalar(1));
  /// y_v for a 0-based variable index v in 0..2n-1.
  static WeylElement variable(int n, int v);
  static WeylElement p(int n, int i) { return variable(n, p_index(i)); }
  static WeylElement q(int n, int i) { return variable(n, q_index(i)); }

  int n() const { return n_; }
  int num_vars() const { return 2 * n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True if the element has no y dependence (it lies in the scalars K).
  bool is_scalar() const;

  EpsScalar coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const EpsScalar& c);

  /// Highest total y-degree; -1 for zero.
  int y_degree() const;
  /// Part of homogeneous y-degree d.
  WeylElement y_homogeneous_part(int d) const;

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(const EpsScalar& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const EpsScalar& c) { return a *= c; }
  friend WeylElement operator*(const EpsScalar& c, WeylElement a) { return a *= c; }
  WeylElement operator-() const;

  /// Commutative (undeformed) product of polynomials.
  WeylElement commutative_product(const WeylElement& other) const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend bool operator<(const WeylElement& a, const WeylElement& b);

  /// Expression-grammar rendering, e.g. "p1*q1 + 1/2*e".
  std::string to_string() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

std::string render_monomial(const Exponents& e);

EpsScalar eps_arith_add(const EpsScalar& a, const EpsScalar& b);
EpsScalar eps_arith_mul(const EpsScalar& a, const EpsScalar& b);
EpsScalar eps_arith_neg(const EpsScalar& a);

/// Formal partial derivative with respect to y_v (0-based).
WeylElement partial_derivative(const WeylElement& f, int v);

/// Constant term a(0).
EpsScalar eval_at_zero(const WeylElement& f);

/// Order-k term m(alpha^k (f (x) g)) / k! of the Moyal expansion, without the
/// eps^k factor.
WeylElement moyal_order(const WeylElement& f, const WeylElement& g, int k);

/// Moyal product f * g = m(exp(eps alpha)(f (x) g)).
WeylElement moyal(const WeylElement& f, const WeylElement& g);

/// [f, g]_eps = (f*g - g*f) / eps.
WeylElement bracket(const WeylElement& f, const WeylElement& g);

/// Common graded degree (deg p = deg q = 1, deg eps = 2), or nullopt when the
/// element is not homogeneous. The zero element has no degree.
std::optional<int> graded_degree(const WeylElement& f);

}  // namespace weylver
