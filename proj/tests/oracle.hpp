#pragma once

// Independent reference implementations used only by the tests. They share
// the value types with the library but none of its kernels: products are
// expanded operator by operator on whole polynomials, and integrals are done
// by iterated antidifferentiation instead of the closed simplex formula.

#include "weylver/hochschild.hpp"
#include "weylver/upolynomial.hpp"

#include <utility>
#include <vector>

namespace oracle {

using namespace weylver;

using Pair = std::pair<WeylElement, WeylElement>;

// alpha(f (x) g) = 1/2 sum_r (d_p f (x) d_q g - d_q f (x) d_p g), on a list of pairs.
inline std::vector<std::pair<EpsScalar, Pair>> alpha(const std::vector<std::pair<EpsScalar, Pair>>& in) {
  std::vector<std::pair<EpsScalar, Pair>> out;
  for (const auto& [c, fg] : in) {
    const int n = fg.first.n();
    for (int r = 1; r <= n; ++r) {
      const EpsScalar half = c * make_rational(1, 2);
      Pair a{partial_derivative(fg.first, p_index(r)), partial_derivative(fg.second, q_index(r))};
      Pair b{partial_derivative(fg.first, q_index(r)), partial_derivative(fg.second, p_index(r))};
      if (!a.first.is_zero() && !a.second.is_zero()) out.push_back({half, a});
      if (!b.first.is_zero() && !b.second.is_zero()) out.push_back({-half, b});
    }
  }
  return out;
}

// Moyal product summed order by order: eps^k/k! m(alpha^k (f (x) g)).
inline WeylElement moyal(const WeylElement& f, const WeylElement& g) {
  WeylElement out(f.n());
  std::vector<std::pair<EpsScalar, Pair>> cur{{EpsScalar(1), {f, g}}};
  for (int k = 0; !cur.empty(); ++k) {
    for (const auto& [c, fg] : cur)
      out += fg.first.commutative_product(fg.second) * (c * EpsScalar::monomial(k, Rational(1) / factorial(k)));
    cur = alpha(cur);
  }
  return out;
}

// Integral over 0 <= u_1 <= ... <= u_k <= 1 by integrating out u_1 on [0, u_2],
// then u_2 on [0, u_3], and so on.
inline EpsScalar iterated_simplex_integral(const UPolynomial& p) {
  const int k = p.num_vars();
  UPolynomial cur = p;
  for (int i = 0; i < k; ++i) {
    UPolynomial next(k);
    for (const auto& [e, c] : cur.terms()) {
      const int m = e[i] + 1;
      const EpsScalar a = c * Rational(Rational(1) / m);
      Exponents f = e;
      f[i] = 0;
      if (i + 1 < k) f[i + 1] += m;  // upper limit u_{i+1}; lower limit 0 contributes nothing
      next.add_term(f, a);
    }
    cur = std::move(next);
  }
  return cur.coefficient(Exponents(k, 0));
}

// Brute-force tau_2n: pi by explicit derivatives over all of S_2n, then every
// pair exponential exp(eps(2u_i - 2u_j + 1) alpha_ij) expanded on whole
// polynomial slots, mu, and the iterated integral.
inline EpsScalar tau(int n, const ChainTensor& c) {
  const int slots = 2 * n + 1, k = 2 * n;
  struct Term {
    UPolynomial w;
    std::vector<WeylElement> a;
  };
  std::vector<Term> cur;
  for (const auto& [t, coef] : c.terms()) {
    const auto a = c.slots_of(t);
    for (const auto& perm : all_permutations(k)) {
      std::vector<WeylElement> d = a;
      bool zero = false;
      for (int s = 1; s <= k && !zero; ++s) {
        d[s] = partial_derivative(a[s], perm.image[s - 1]);
        zero = d[s].is_zero();
      }
      if (!zero) cur.push_back({UPolynomial(k, perm.sign == 1 ? coef : -coef), d});
    }
  }
  auto u = [&](int s) { return s == 0 ? UPolynomial(k) : UPolynomial::variable(k, s - 1); };
  for (int i = 0; i < slots; ++i)
    for (int j = i + 1; j < slots; ++j) {
      const UPolynomial w = (u(i) - u(j)) * EpsScalar(2) + UPolynomial(k, EpsScalar(1));
      std::vector<Term> next = cur, power = cur;
      for (int m = 1; !power.empty(); ++m) {
        std::vector<Term> step;
        for (const auto& term : power)
          for (int r = 1; r <= n; ++r)
            for (int sgn : {1, -1}) {
              const int vi = sgn == 1 ? p_index(r) : q_index(r);
              const int vj = sgn == 1 ? q_index(r) : p_index(r);
              Term t = term;
              t.a[i] = partial_derivative(term.a[i], vi);
              t.a[j] = partial_derivative(term.a[j], vj);
              if (t.a[i].is_zero() || t.a[j].is_zero()) continue;
              t.w = t.w * w * EpsScalar::monomial(1, make_rational(sgn, 2) / m);
              step.push_back(std::move(t));
            }
        next.insert(next.end(), step.begin(), step.end());
        power = std::move(step);
      }
      cur = std::move(next);
    }
  UPolynomial integrand(k);
  for (const auto& term : cur) {
    EpsScalar m(1);
    for (const auto& a : term.a) m *= eval_at_zero(a);
    if (!m.is_zero()) integrand += term.w * m;
  }
  return iterated_simplex_integral(integrand);
}

}  // namespace oracle
