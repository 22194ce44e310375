#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weylver {

/// Exact rational number. Expression templates are disabled so that the type
/// behaves like a plain value inside Eigen matrices and standard containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(num), Integer(den));
}

Rational factorial(int k);
Rational binomial(int n, int k);

/// Bernoulli numbers B_0, B_1 = -1/2, B_2 = 1/6, ... from the recurrence
/// sum_{k<=m} C(m+1,k) B_k = 0. Memoized and thread safe.
Rational bernoulli(int m);

/// "num/den" or "num" when den == 1.
std::string to_string(const Rational& r);

/// Parses "num" or "num/den" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// A permutation of 0..k-1 together with its sign.
struct SignedPermutation {
  std::vector<int> image;
  int sign = 1;
};

/// All permutations of 0..k-1 in lexicographic order.
std::vector<SignedPermutation> all_permutations(int k);

int permutation_sign(const std::vector<int>& image);
std::vector<int> inverse_permutation(const std::vector<int>& image);

}  // namespace weylver
