#pragma once

#include "weylver/eps_scalar.hpp"
#include "weylver/weyl_element.hpp"

#include <map>
#include <string>
#include <vector>

namespace weylver {

/// Polynomial in k commuting variables with EpsScalar coefficients. Used for
/// configuration-space integrands (u_1..u_k), for generating series in Cartan
/// coordinates (t_i, s_r), and for the Taylor coefficients of the n = 1
/// closed form.
class UPolynomial {
 public:
  using TermMap = std::map<Exponents, EpsScalar>;

  UPolynomial() = default;
  explicit UPolynomial(int k) : k_(k) {}
  UPolynomial(int k, const EpsScalar& constant);

  static UPolynomial variable(int k, int i);
  /// constant + sum_i coefficients[i] * u_i
  static UPolynomial affine(int k, const EpsScalar& constant, const std::vector<Rational>& linear);

  int num_vars() const { return k_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  EpsScalar coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const EpsScalar& c);

  /// Drops all terms of total degree > d.
  UPolynomial truncated(int d) const;
  EpsScalar evaluate(const std::vector<EpsScalar>& point) const;

  UPolynomial& operator+=(const UPolynomial& other);
  UPolynomial& operator-=(const UPolynomial& other);
  UPolynomial& operator*=(const EpsScalar& c);
  friend UPolynomial operator+(UPolynomial a, const UPolynomial& b) { return a += b; }
  friend UPolynomial operator-(UPolynomial a, const UPolynomial& b) { return a -= b; }
  friend UPolynomial operator*(UPolynomial a, const EpsScalar& c) { return a *= c; }
  friend UPolynomial operator*(const EpsScalar& c, UPolynomial a) { return a *= c; }
  friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b);
  friend bool operator==(const UPolynomial&, const UPolynomial&) = default;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int k_ = 0;
  TermMap terms_;
};

UPolynomial pow(const UPolynomial& p, int e);

}  // namespace weylver
