#pragma once

#include "weylver/weyl_element.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace weylver {

/// A tuple of monomials, one exponent vector per tensor slot.
using MonomialTuple = std::vector<Exponents>;

/// Hochschild k-chain: a K-linear combination of elementary tensors
/// a_0 (x) ... (x) a_k. Stored fully expanded in the monomial basis, which is a
/// K-basis of the tensor power, so equal chains have equal representations.
class ChainTensor {
 public:
  using TermMap = std::map<MonomialTuple, EpsScalar>;

  ChainTensor(int n, int degree) : n_(n), degree_(degree) {}

  /// coefficient * a_0 (x) ... (x) a_k, expanded multilinearly.
  static ChainTensor elementary(const std::vector<WeylElement>& slots,
                                const EpsScalar& coefficient = EpsScalar(1));

  int n() const { return n_; }
  /// k, so every tuple has k+1 slots.
  int degree() const { return degree_; }
  int arity() const { return degree_ + 1; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MonomialTuple& tuple, const EpsScalar& c);
  void add_elementary(const std::vector<WeylElement>& slots, const EpsScalar& c);

  /// The slots of a basis tuple as Weyl elements.
  std::vector<WeylElement> slots_of(const MonomialTuple& tuple) const;

  ChainTensor& operator+=(const ChainTensor& other);
  ChainTensor& operator-=(const ChainTensor& other);
  ChainTensor& operator*=(const EpsScalar& c);
  friend ChainTensor operator+(ChainTensor a, const ChainTensor& b) { return a += b; }
  friend ChainTensor operator-(ChainTensor a, const ChainTensor& b) { return a -= b; }
  friend ChainTensor operator*(ChainTensor a, const EpsScalar& c) { return a *= c; }
  friend bool operator==(const ChainTensor&, const ChainTensor&) = default;

  std::string to_string() const;

 private:
  int n_;
  int degree_;
  TermMap terms_;
};

/// d(a_0 (x) ... (x) a_k) with Moyal products and the wrap-around term.
ChainTensor hochschild_boundary(const ChainTensor& c);

/// c_2n = sum_sigma sign(sigma) 1 (x) y_sigma(1) (x) ... (x) y_sigma(2n).
ChainTensor canonical_cycle(int n);

/// Image in the normalized complex A (x) (A/K1)^{(x)k}: drops every basis
/// tuple with a constant monomial in a slot >= 1.
ChainTensor normalize_chain(const ChainTensor& c);

/// Parameters of the seeded random generators used by property tests and the
/// verification suites.
///
/// Distribution: each chain has 1..max_terms elementary tensors. Each slot is
/// a sum of 1..max_monomials monomials. A monomial has y-degree uniform in
/// [min_degree, max_degree] (min_degree is 1 in slots >= 1 of normalized
/// chains), its exponents are placed on uniformly random variables, and its
/// coefficient is c * eps^k with k uniform in [eps_min, eps_max], c = a/b,
/// a uniform in [-3, 3] \ {0}, b uniform in [1, 3].
struct RandomSpec {
  int n = 1;
  int max_degree = 3;
  int max_terms = 2;
  int max_monomials = 2;
  int eps_min = -1;
  int eps_max = 1;
  bool normalized = true;
};

class RandomWeyl {
 public:
  explicit RandomWeyl(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  Rational coefficient();
  EpsScalar eps_coefficient(int eps_min, int eps_max);
  WeylElement monomial(int n, int degree, int eps_min, int eps_max);
  WeylElement element(int n, int min_degree, int max_degree, int max_monomials, int eps_min,
                      int eps_max);
  WeylElement element(const RandomSpec& spec, bool slot_positive);
  ChainTensor chain(const RandomSpec& spec, int degree);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace weylver
