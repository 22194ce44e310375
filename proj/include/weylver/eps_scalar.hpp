#pragma once

#include "weylver/rational.hpp"

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace weylver {

/// Element of Q[eps, 1/eps]: a finite Laurent polynomial in the formal
/// parameter eps with exact rational coefficients. Terms are kept sorted by
/// exponent with no zero coefficients, so equality is structural.
class EpsScalar {
 public:
  using Term = std::pair<int, Rational>;

  EpsScalar() = default;
  EpsScalar(const Rational& c);  // NOLINT: implicit constant embedding
  EpsScalar(int c) : EpsScalar(Rational(c)) {}  // NOLINT
  EpsScalar(long c) : EpsScalar(Rational(c)) {}  // NOLINT

  /// c * eps^exponent
  static EpsScalar monomial(int exponent, const Rational& c = Rational(1));
  static EpsScalar eps(int exponent = 1) { return monomial(exponent); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Rational coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Multiplies by eps^k.
  EpsScalar shifted(int k) const;

  EpsScalar& operator+=(const EpsScalar& other);
  EpsScalar& operator-=(const EpsScalar& other);
  EpsScalar& operator*=(const EpsScalar& other);
  EpsScalar& operator*=(const Rational& c);
  /// Division by a nonzero rational constant only.
  EpsScalar& operator/=(const Rational& c);

  friend EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
  friend EpsScalar operator-(EpsScalar a, const EpsScalar& b) { return a -= b; }
  friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b);
  friend EpsScalar operator*(EpsScalar a, const Rational& c) { return a *= c; }
  friend EpsScalar operator*(const Rational& c, EpsScalar a) { return a *= c; }
  friend EpsScalar operator/(EpsScalar a, const Rational& c) { return a /= c; }
  EpsScalar operator-() const;
  EpsScalar operator+() const { return *this; }

  friend bool operator==(const EpsScalar&, const EpsScalar&) = default;
  /// Total order used for canonical containers; not an algebraic order.
  friend bool operator<(const EpsScalar& a, const EpsScalar& b);

  /// Renders in the expression grammar, e.g. "1/2*e^-1 + 3 - e^2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

EpsScalar pow(const EpsScalar& x, int k);
std::ostream& operator<<(std::ostream& os, const EpsScalar& x);

}  // namespace weylver

namespace Eigen {

template <>
struct NumTraits<weylver::EpsScalar> : GenericNumTraits<weylver::EpsScalar> {
  using Real = weylver::EpsScalar;
  using NonInteger = weylver::EpsScalar;
  using Nested = weylver::EpsScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
};

template <>
struct NumTraits<weylver::Rational> : GenericNumTraits<weylver::Rational> {
  using Real = weylver::Rational;
  using NonInteger = weylver::Rational;
  using Nested = weylver::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
};

}  // namespace Eigen
