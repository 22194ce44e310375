#include "weylver/integrate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace weylver {

OrderedRegion OrderedRegion::standard(int k) {
  OrderedRegion r;
  r.k = k;
  r.order.resize(k);
  std::iota(r.order.begin(), r.order.end(), 0);
  return r;
}

OrderedRegion OrderedRegion::from_order(std::vector<int> order, int orientation) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("region ordering is not a bijection");
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +-1");
  OrderedRegion r;
  r.k = static_cast<int>(order.size());
  r.order = std::move(order);
  r.orientation = orientation;
  return r;
}

std::vector<int> OrderedRegion::ranks() const { return inverse_permutation(order); }

Rational simplex_monomial_integral(const std::vector<int>& exponents) {
  Integer den = 1;
  int prefix = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    prefix += exponents[i];
    den *= prefix + static_cast<int>(i) + 1;
  }
  return Rational(Integer(1), den);
}

EpsScalar integrate_over_region(const UPolynomial& p, const OrderedRegion& region) {
  if (p.num_vars() != region.k) throw std::invalid_argument("integrand arity does not match region");
  EpsScalar out;
  std::vector<int> ordered(region.k);
  for (const auto& [e, c] : p.terms()) {
    for (int pos = 0; pos < region.k; ++pos) ordered[pos] = e[region.order[pos]];
    out += c * simplex_monomial_integral(ordered);
  }
  return region.orientation == 1 ? out : -out;
}

EpsScalar integrate_over_cube(const UPolynomial& p) {
  EpsScalar out;
  for (const auto& [e, c] : p.terms()) {
    Integer den = 1;
    for (int x : e) den *= x + 1;
    out += c * Rational(Integer(1), den);
  }
  return out;
}

EpsScalar integrate_over_cube_by_regions(const UPolynomial& p) {
  EpsScalar out;
  for (const auto& perm : all_permutations(p.num_vars()))
    out += integrate_over_region(p, OrderedRegion::from_order(perm.image));
  return out;
}

UPolynomial psi_branch(int k, int a, int b, bool a_before_b) {
  std::vector<Rational> linear(k, Rational(0));
  if (a >= 0) linear[a] += 2;
  if (b >= 0) linear[b] -= 2;
  return UPolynomial::affine(k, EpsScalar(a_before_b ? 1 : -1), linear);
}

namespace {

Integer from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : v;
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  Integer out = Integer(hi);
  out <<= 64;
  out += Integer(lo);
  return negative ? Integer(-out) : out;
}

}  // namespace

Rational psi_cycle_integral(int j) {
  if (j < 2) throw std::invalid_argument("psi_cycle_integral needs j >= 2");
  if (j > 10) throw std::invalid_argument("psi_cycle_integral supports j <= 10");
  // Every u_i occurs in exactly two factors, so exponents are at most 2 and
  // monomials are indexed densely in base 3. Coefficients are integers.
  int size = 1;
  for (int i = 0; i < j; ++i) size *= 3;
  std::vector<int> power3(j + 1, 1);
  for (int i = 1; i <= j; ++i) power3[i] = power3[i - 1] * 3;
  std::vector<std::vector<int>> digits(size, std::vector<int>(j));
  for (int idx = 0; idx < size; ++idx)
    for (int i = 0, x = idx; i < j; ++i, x /= 3) digits[idx][i] = x % 3;

  // Expansion of prod_i (2u_i - 2u_{i+1} + s_i) for a sign pattern s (bit i set
  // means s_i = +1), cached because it depends on the region only through s.
  std::unordered_map<unsigned, std::vector<std::int64_t>> expansions;
  auto expansion = [&](unsigned mask) -> const std::vector<std::int64_t>& {
    auto it = expansions.find(mask);
    if (it != expansions.end()) return it->second;
    std::vector<std::int64_t> poly(size, 0);
    poly[0] = 1;
    for (int f = 0; f < j; ++f) {
      const int a = f, b = (f + 1) % j;
      const std::int64_t s = (mask >> f & 1u) ? 1 : -1;
      std::vector<std::int64_t> next(size, 0);
      for (int idx = 0; idx < size; ++idx) {
        if (poly[idx] == 0) continue;
        next[idx] += s * poly[idx];
        if (digits[idx][a] < 2) next[idx + power3[a]] += 2 * poly[idx];
        if (digits[idx][b] < 2) next[idx + power3[b]] -= 2 * poly[idx];
      }
      poly.swap(next);
    }
    return expansions.emplace(mask, std::move(poly)).first->second;
  };

  // Every simplex denominator prod (S_i + i) is a product of distinct integers
  // in [1, 2j], hence divides (2j)!.
  std::int64_t common = 1;
  for (int i = 2; i <= 2 * j; ++i) common *= i;

  __int128 total = 0;
  std::vector<int> order(j);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> rank(j);
  do {
    for (int pos = 0; pos < j; ++pos) rank[order[pos]] = pos;
    unsigned mask = 0;
    for (int f = 0; f < j; ++f)
      if (rank[f] < rank[(f + 1) % j]) mask |= 1u << f;
    const auto& poly = expansion(mask);
    for (int idx = 0; idx < size; ++idx) {
      if (poly[idx] == 0) continue;
      std::int64_t den = 1;
      int prefix = 0;
      for (int pos = 0; pos < j; ++pos) {
        prefix += digits[idx][order[pos]];
        den *= prefix + pos + 1;
      }
      total += static_cast<__int128>(poly[idx]) * (common / den);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(from_int128(total), Integer(common));
}

Rational closed_form_I(int j) {
  if (j < 2) throw std::invalid_argument("closed_form_I needs j >= 2");
  if (j % 2 == 1) return Rational(0);
  Integer two_j = 1;
  two_j <<= j;
  return -bernoulli(j) * Rational(two_j) / factorial(j);
}

}  // namespace weylver
