#include "weylver/hochschild.hpp"

#include <stdexcept>

namespace weylver {

void ChainTensor::add_term(const MonomialTuple& tuple, const EpsScalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(tuple.size()) != arity()) throw std::invalid_argument("tensor arity mismatch");
  auto [it, inserted] = terms_.try_emplace(tuple, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ChainTensor::add_elementary(const std::vector<WeylElement>& slots, const EpsScalar& c) {
  if (static_cast<int>(slots.size()) != arity()) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& s : slots) {
    if (s.is_zero()) return;
    if (s.n() != n_) throw std::invalid_argument("Weyl algebra dimension mismatch");
  }
  MonomialTuple tuple(slots.size());
  auto rec = [&](auto&& self, std::size_t slot, const EpsScalar& acc) -> void {
    if (slot == slots.size()) {
      add_term(tuple, acc);
      return;
    }
    for (const auto& [e, coef] : slots[slot].terms()) {
      tuple[slot] = e;
      self(self, slot + 1, acc * coef);
    }
  };
  rec(rec, 0, c);
}

ChainTensor ChainTensor::elementary(const std::vector<WeylElement>& slots,
                                    const EpsScalar& coefficient) {
  if (slots.empty()) throw std::invalid_argument("a chain needs at least one slot");
  ChainTensor out(slots.front().n(), static_cast<int>(slots.size()) - 1);
  out.add_elementary(slots, coefficient);
  return out;
}

std::vector<WeylElement> ChainTensor::slots_of(const MonomialTuple& tuple) const {
  std::vector<WeylElement> out;
  out.reserve(tuple.size());
  for (const auto& e : tuple) out.push_back(WeylElement::monomial(n_, e));
  return out;
}

ChainTensor& ChainTensor::operator+=(const ChainTensor& other) {
  if (other.n_ != n_ || other.degree_ != degree_) throw std::invalid_argument("chain shape mismatch");
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

ChainTensor& ChainTensor::operator-=(const ChainTensor& other) {
  if (other.n_ != n_ || other.degree_ != degree_) throw std::invalid_argument("chain shape mismatch");
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

ChainTensor& ChainTensor::operator*=(const EpsScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coef] : terms_) coef *= c;
  return *this;
}

std::string ChainTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [tuple, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")*[";
    for (std::size_t s = 0; s < tuple.size(); ++s) {
      if (s) out += " | ";
      const std::string m = render_monomial(tuple[s]);
      out += m.empty() ? "1" : m;
    }
    out += "]";
  }
  return out;
}

ChainTensor hochschild_boundary(const ChainTensor& c) {
  const int k = c.degree();
  if (k < 1) throw std::invalid_argument("hochschild_boundary needs degree >= 1");
  ChainTensor out(c.n(), k - 1);
  for (const auto& [tuple, coef] : c.terms()) {
    const std::vector<WeylElement> a = c.slots_of(tuple);
    // a_j * a_{j+1} in position j, sign (-1)^j.
    for (int j = 0; j < k; ++j) {
      std::vector<WeylElement> slots;
      slots.reserve(k);
      for (int s = 0; s < j; ++s) slots.push_back(a[s]);
      slots.push_back(moyal(a[j], a[j + 1]));
      for (int s = j + 2; s <= k; ++s) slots.push_back(a[s]);
      out.add_elementary(slots, j % 2 == 0 ? coef : -coef);
    }
    std::vector<WeylElement> wrap;
    wrap.reserve(k);
    wrap.push_back(moyal(a[k], a[0]));
    for (int s = 1; s < k; ++s) wrap.push_back(a[s]);
    out.add_elementary(wrap, k % 2 == 0 ? coef : -coef);
  }
  return out;
}

ChainTensor canonical_cycle(int n) {
  if (n < 1) throw std::invalid_argument("canonical_cycle needs n >= 1");
  ChainTensor out(n, 2 * n);
  MonomialTuple tuple(2 * n + 1, Exponents(2 * n, 0));
  for (const auto& perm : all_permutations(2 * n)) {
    for (int s = 0; s < 2 * n; ++s) {
      tuple[s + 1].assign(2 * n, 0);
      tuple[s + 1][perm.image[s]] = 1;
    }
    out.add_term(tuple, EpsScalar(perm.sign));
  }
  return out;
}

ChainTensor normalize_chain(const ChainTensor& c) {
  ChainTensor out(c.n(), c.degree());
  for (const auto& [tuple, coef] : c.terms()) {
    bool scalar_slot = false;
    for (std::size_t s = 1; s < tuple.size() && !scalar_slot; ++s) {
      scalar_slot = true;
      for (int x : tuple[s]) scalar_slot = scalar_slot && x == 0;
    }
    if (!scalar_slot) out.add_term(tuple, coef);
  }
  return out;
}

int RandomWeyl::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational RandomWeyl::coefficient() {
  int a = 0;
  while (a == 0) a = uniform(-3, 3);
  return make_rational(a, uniform(1, 3));
}

EpsScalar RandomWeyl::eps_coefficient(int eps_min, int eps_max) {
  return EpsScalar::monomial(uniform(eps_min, eps_max), coefficient());
}

WeylElement RandomWeyl::monomial(int n, int degree, int eps_min, int eps_max) {
  Exponents e(2 * n, 0);
  for (int d = 0; d < degree; ++d) e[uniform(0, 2 * n - 1)] += 1;
  return WeylElement::monomial(n, e, eps_coefficient(eps_min, eps_max));
}

WeylElement RandomWeyl::element(int n, int min_degree, int max_degree, int max_monomials,
                                int eps_min, int eps_max) {
  WeylElement out(n);
  while (out.is_zero()) {
    const int count = uniform(1, max_monomials);
    for (int i = 0; i < count; ++i)
      out += monomial(n, uniform(min_degree, max_degree), eps_min, eps_max);
  }
  return out;
}

WeylElement RandomWeyl::element(const RandomSpec& spec, bool slot_positive) {
  const int min_degree = (spec.normalized && slot_positive) ? 1 : 0;
  return element(spec.n, min_degree, spec.max_degree, spec.max_monomials, spec.eps_min,
                 spec.eps_max);
}

ChainTensor RandomWeyl::chain(const RandomSpec& spec, int degree) {
  ChainTensor out(spec.n, degree);
  while (out.is_zero()) {
    const int count = uniform(1, spec.max_terms);
    for (int t = 0; t < count; ++t) {
      std::vector<WeylElement> slots;
      for (int s = 0; s <= degree; ++s) slots.push_back(element(spec, s > 0));
      out.add_elementary(slots, EpsScalar(1));
    }
  }
  return out;
}

}  // namespace weylver
