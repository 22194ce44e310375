#include "weylver/tau.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace weylver {

namespace {

using TupleTerms = std::vector<std::pair<MonomialTuple, Rational>>;

// alpha_ij on one basis tuple.
TupleTerms alpha_terms(const MonomialTuple& t, int i, int j) {
  TupleTerms out;
  const int n = static_cast<int>(t[0].size()) / 2;
  for (int r = 1; r <= n; ++r) {
    const int p = p_index(r), q = q_index(r);
    if (t[i][p] > 0 && t[j][q] > 0) {
      MonomialTuple s = t;
      const Rational c = Rational(t[i][p] * t[j][q]) / 2;
      --s[i][p];
      --s[j][q];
      out.emplace_back(std::move(s), c);
    }
    if (t[i][q] > 0 && t[j][p] > 0) {
      MonomialTuple s = t;
      const Rational c = -Rational(t[i][q] * t[j][p]) / 2;
      --s[i][q];
      --s[j][p];
      out.emplace_back(std::move(s), c);
    }
  }
  return out;
}

void check_slots(int arity, int i, int j) {
  if (i < 0 || j < 0 || i >= arity || j >= arity) throw std::out_of_range("alpha slot index out of range");
  if (i == j) throw std::invalid_argument("alpha_ii is undefined");
}

void check_tau_input(int n, const ChainTensor& c) {
  if (n < 1) throw std::invalid_argument("tau needs n >= 1");
  if (c.n() != n) throw std::invalid_argument("chain dimension does not match n");
  if (c.degree() != 2 * n) throw std::invalid_argument("tau_2n needs a chain of degree 2n");
}

// Depth-first expansion of the antisymmetrized derivative: slot s >= 1 takes
// the derivative in an unused variable, tracking the permutation sign.
void pi_recurse(const MonomialTuple& t, MonomialTuple& cur, int slot, std::vector<bool>& used,
                std::vector<int>& image, const EpsScalar& coef, ChainTensor& out) {
  const int k = static_cast<int>(t.size()) - 1;
  if (slot > k) {
    out.add_term(cur, permutation_sign(image) == 1 ? coef : -coef);
    return;
  }
  for (int v = 0; v < k; ++v) {
    if (used[v] || t[slot][v] == 0) continue;
    used[v] = true;
    image.push_back(v);
    cur[slot][v] = t[slot][v] - 1;
    pi_recurse(t, cur, slot + 1, used, image, coef * Rational(t[slot][v]), out);
    cur[slot][v] = t[slot][v];
    image.pop_back();
    used[v] = false;
  }
}

}  // namespace

ChainTensor alpha_apply(const ChainTensor& c, int i, int j) {
  check_slots(c.arity(), i, j);
  ChainTensor out(c.n(), c.degree());
  for (const auto& [t, coef] : c.terms())
    for (const auto& [s, x] : alpha_terms(t, i, j)) out.add_term(s, coef * x);
  return out;
}

ChainTensor pi_apply(const ChainTensor& c) {
  if (c.degree() != 2 * c.n()) throw std::invalid_argument("pi_2n needs a chain of degree 2n");
  ChainTensor out(c.n(), c.degree());
  std::vector<bool> used(2 * c.n(), false);
  std::vector<int> image;
  for (const auto& [t, coef] : c.terms()) {
    MonomialTuple cur = t;
    pi_recurse(t, cur, 1, used, image, coef, out);
  }
  return out;
}

EpsScalar mu_apply(const ChainTensor& c) {
  const MonomialTuple zero(c.arity(), Exponents(2 * c.n(), 0));
  auto it = c.terms().find(zero);
  return it == c.terms().end() ? EpsScalar() : it->second;
}

PairWeights::PairWeights(int slots, int u_vars)
    : slots_(slots), u_vars_(u_vars), w_(slots * slots, UPolynomial(u_vars)) {}

void PairWeights::set(int a, int b, const UPolynomial& w) {
  w_[a * slots_ + b] = w;
  w_[b * slots_ + a] = w * EpsScalar(-1);
}

PairWeights PairWeights::psi_on_region(const std::vector<int>& slot_var, const OrderedRegion& region) {
  const int slots = static_cast<int>(slot_var.size());
  PairWeights out(slots, region.k);
  const auto ranks = region.ranks();
  auto rank = [&](int s) { return slot_var[s] < 0 ? -1 : ranks[slot_var[s]]; };
  for (int a = 0; a < slots; ++a)
    for (int b = a + 1; b < slots; ++b)
      out.set(a, b, psi_branch(region.k, slot_var[a], slot_var[b], rank(a) < rank(b)));
  return out;
}

PairingKernel::PairingKernel(PairWeights weights) : weights_(std::move(weights)) {}

const UPolynomial& PairingKernel::weight_power(int a, int b, int k) {
  auto key = std::make_tuple(a, b, k);
  auto it = powers_.find(key);
  if (it != powers_.end()) return it->second;
  UPolynomial p = k == 0 ? UPolynomial(weights_.u_vars(), EpsScalar(1))
                         : weight_power(a, b, k - 1) * weights_(a, b) * EpsScalar(Rational(1) / k);
  return powers_.emplace(key, std::move(p)).first->second;
}

const UPolynomial& PairingKernel::signature_sum(const std::vector<int>& rows,
                                                const std::vector<int>& cols) {
  auto key = std::make_pair(rows, cols);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  const int m = static_cast<int>(rows.size());
  const int u = weights_.u_vars();
  UPolynomial total(u);
  std::vector<int> row_left = rows, col_left = cols;
  const int contractions = std::accumulate(rows.begin(), rows.end(), 0);

  // Fill the table row by row, cell by cell, skipping the diagonal.
  auto fill = [&](auto&& self, int a, int b, const UPolynomial& acc) -> void {
    if (a == m) {
      total += acc;
      return;
    }
    if (b == m) {
      if (row_left[a] == 0) self(self, a + 1, 0, acc);
      return;
    }
    if (b == a) {
      self(self, a, b + 1, acc);
      return;
    }
    if (b == 0 || (b == 1 && a == 0)) {
      int room = 0;
      for (int c = 0; c < m; ++c)
        if (c != a) room += col_left[c];
      if (room < row_left[a]) return;
    }
    const int hi = std::min(row_left[a], col_left[b]);
    for (int k = 0; k <= hi; ++k) {
      row_left[a] -= k;
      col_left[b] -= k;
      if (k == 0)
        self(self, a, b + 1, acc);
      else
        self(self, a, b + 1, acc * weight_power(a, b, k));
      row_left[a] += k;
      col_left[b] += k;
    }
  };
  if (contractions == std::accumulate(cols.begin(), cols.end(), 0))
    fill(fill, 0, 0, UPolynomial(u, EpsScalar(1)));

  if (!total.is_zero()) {
    Rational scale = 1;
    for (int a = 0; a < m; ++a) scale *= factorial(rows[a]) * factorial(cols[a]);
    for (int i = 0; i < contractions; ++i) scale /= 2;
    total *= EpsScalar::monomial(contractions, scale);
  }
  return cache_.emplace(std::move(key), std::move(total)).first->second;
}

UPolynomial PairingKernel::integrand(const MonomialTuple& tuple) {
  const int m = static_cast<int>(tuple.size());
  if (m != weights_.slots()) throw std::invalid_argument("tuple arity does not match the kernel");
  const int n = static_cast<int>(tuple[0].size()) / 2;
  UPolynomial out(weights_.u_vars(), EpsScalar(1));
  std::vector<int> rows(m), cols(m);
  for (int r = 1; r <= n; ++r) {
    for (int a = 0; a < m; ++a) {
      rows[a] = tuple[a][p_index(r)];
      cols[a] = tuple[a][q_index(r)];
    }
    const UPolynomial& f = signature_sum(rows, cols);
    if (f.is_zero()) return UPolynomial(weights_.u_vars());
    out = out * f;
  }
  return out;
}

namespace {

std::vector<int> standard_slot_vars(int n) {
  std::vector<int> v(2 * n + 1);
  v[0] = -1;
  std::iota(v.begin() + 1, v.end(), 0);
  return v;
}

EpsScalar evaluate_on_region(int n, const ChainTensor& c, const OrderedRegion& region) {
  const ChainTensor pc = pi_apply(c);
  PairingKernel kernel(PairWeights::psi_on_region(standard_slot_vars(n), region));
  EpsScalar out;
  for (const auto& [t, coef] : pc.terms()) {
    UPolynomial f = kernel.integrand(t);
    if (!f.is_zero()) out += coef * integrate_over_region(f, region);
  }
  return out;
}

std::vector<std::pair<int, int>> lexicographic_pairs(int slots) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < slots; ++i)
    for (int j = i + 1; j < slots; ++j) out.emplace_back(i, j);
  return out;
}

void verify_orders(int n, const ChainTensor& c, const EpsScalar& value) {
  auto forward = lexicographic_pairs(2 * n + 1);
  auto backward = forward;
  std::reverse(backward.begin(), backward.end());
  for (auto& [i, j] : backward) std::swap(i, j);
  const EpsScalar a = tau_eval_by_operators(n, c, forward);
  const EpsScalar b = tau_eval_by_operators(n, c, backward);
  if (a != value || b != value)
    throw std::logic_error("tau: operator orders disagree (" + value.to_string() + ", " +
                           a.to_string() + ", " + b.to_string() + ")");
}

}  // namespace

EpsScalar tau_eval(int n, const ChainTensor& c, const TauOptions& options) {
  check_tau_input(n, c);
  const EpsScalar value = evaluate_on_region(n, c, OrderedRegion::standard(2 * n));
  if (options.verify_operator_order) verify_orders(n, c, value);
  return value;
}

EpsScalar tau_sigma_eval(int n, const std::vector<int>& sigma, const ChainTensor& c,
                         const TauOptions& options) {
  check_tau_input(n, c);
  if (static_cast<int>(sigma.size()) != 2 * n) throw std::invalid_argument("sigma must permute 2n letters");
  const auto region = OrderedRegion::from_order(inverse_permutation(sigma));
  const EpsScalar value = evaluate_on_region(n, c, region);
  if (options.verify_operator_order && region.order == OrderedRegion::standard(2 * n).order)
    verify_orders(n, c, value);
  return value;
}

EpsScalar tau_eval_by_operators(int n, const ChainTensor& c,
                                const std::vector<std::pair<int, int>>& pair_order) {
  check_tau_input(n, c);
  const int slots = 2 * n + 1;
  std::vector<std::vector<bool>> seen(slots, std::vector<bool>(slots, false));
  for (auto [i, j] : pair_order) {
    check_slots(slots, i, j);
    if (seen[std::min(i, j)][std::max(i, j)]) throw std::invalid_argument("pair listed twice");
    seen[std::min(i, j)][std::max(i, j)] = true;
  }
  if (pair_order.size() != static_cast<std::size_t>(slots * (slots - 1) / 2))
    throw std::invalid_argument("pair order must list every pair once");

  const auto region = OrderedRegion::standard(2 * n);
  const auto weights = PairWeights::psi_on_region(standard_slot_vars(n), region);
  const int u = 2 * n;

  std::map<MonomialTuple, UPolynomial> current;
  const ChainTensor pc = pi_apply(c);
  for (const auto& [t, coef] : pc.terms()) current.emplace(t, UPolynomial(u, coef));

  for (auto [i, j] : pair_order) {
    // exp(eps w alpha_ij) as a terminating Taylor series.
    std::map<MonomialTuple, UPolynomial> result = current, power = current;
    for (int k = 1; !power.empty(); ++k) {
      std::map<MonomialTuple, UPolynomial> next;
      const UPolynomial step = weights(i, j) * EpsScalar::monomial(1, Rational(1) / k);
      for (const auto& [t, f] : power)
        for (const auto& [s, x] : alpha_terms(t, i, j)) {
          auto [it, inserted] = next.try_emplace(s, UPolynomial(u));
          it->second += f * step * EpsScalar(x);
        }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      for (const auto& [t, f] : next) {
        auto [it, inserted] = result.try_emplace(t, UPolynomial(u));
        it->second += f;
      }
      power = std::move(next);
    }
    std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
    current = std::move(result);
  }
  const MonomialTuple zero(slots, Exponents(2 * n, 0));
  auto it = current.find(zero);
  return it == current.end() ? EpsScalar() : integrate_over_region(it->second, region);
}

namespace {

// Exact quotient of p by (v_a - v_b); throws if the division is not exact.
UPolynomial divide_by_difference(const UPolynomial& p, int a, int b) {
  const int k = p.num_vars();
  std::map<int, UPolynomial> by_power;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[a] = 0;
    auto [it, inserted] = by_power.try_emplace(e[a], UPolynomial(k));
    it->second.add_term(rest, c);
  }
  if (by_power.empty()) return UPolynomial(k);
  const int top = by_power.rbegin()->first;
  const UPolynomial vb = UPolynomial::variable(k, b);
  auto coeff = [&](int d) { auto it = by_power.find(d); return it == by_power.end() ? UPolynomial(k) : it->second; };
  std::vector<UPolynomial> q(std::max(top, 1), UPolynomial(k));
  if (top == 0) {
    if (!by_power.begin()->second.is_zero()) throw std::logic_error("inexact polynomial division");
    return UPolynomial(k);
  }
  q[top - 1] = coeff(top);
  for (int d = top - 1; d >= 1; --d) q[d - 1] = coeff(d) + vb * q[d];
  if (!(coeff(0) + vb * q[0]).is_zero()) throw std::logic_error("inexact polynomial division");
  UPolynomial out(k);
  for (int d = 0; d < top; ++d) {
    for (const auto& [e, c] : q[d].terms()) {
      Exponents f = e;
      f[a] += d;
      out.add_term(f, c);
    }
  }
  return out;
}

// Truncated exponential of a linear form sum_i c_i x_i.
UPolynomial exp_linear(const std::vector<Rational>& linear, int degree) {
  const int k = static_cast<int>(linear.size());
  const UPolynomial l = UPolynomial::affine(k, EpsScalar(), linear);
  UPolynomial out(k, EpsScalar(1)), power(k, EpsScalar(1));
  for (int d = 1; d <= degree; ++d) {
    power = power * l * EpsScalar(Rational(1) / d);
    out += power;
  }
  return out;
}

}  // namespace

UPolynomial closed_form_taylor(int order) {
  if (order < 0) throw std::invalid_argument("negative Taylor order");
  static std::mutex mutex;
  static std::map<int, UPolynomial> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(order); it != memo.end()) return it->second;

  const int k = 3;
  const UPolynomial x = UPolynomial::variable(k, 0), y = UPolynomial::variable(k, 1),
                    z = UPolynomial::variable(k, 2);
  const int deg = order + 2;
  UPolynomial numerator = (x - y) * exp_linear({1, 1, -1}, deg) + (y - z) * exp_linear({-1, 1, 1}, deg) +
                          (z - x) * exp_linear({1, -1, 1}, deg);
  numerator = numerator.truncated(order + 3);
  UPolynomial f = divide_by_difference(numerator, 0, 1);
  f = divide_by_difference(f, 1, 2);
  f = divide_by_difference(f, 2, 0);
  f *= EpsScalar(Rational(-1, 4));
  return memo.emplace(order, f.truncated(order)).first->second;
}

EpsScalar tau_closed_form_n1(const ChainTensor& c) {
  if (c.n() != 1) throw std::invalid_argument("the closed form is for n = 1");
  check_tau_input(1, c);
  const ChainTensor pc = pi_apply(c);
  int total = 0;
  for (const auto& [t, coef] : pc.terms()) {
    int d = 0;
    for (const auto& e : t) d += std::accumulate(e.begin(), e.end(), 0);
    total = std::max(total, d);
  }
  // Each alpha lowers the total y-degree by two.
  const int needed = total / 2;
  const UPolynomial f = closed_form_taylor(std::max(12, needed));

  EpsScalar out;
  ChainTensor a_pow = pc;
  for (int a = 0; a <= needed && !a_pow.is_zero(); ++a) {
    ChainTensor b_pow = a_pow;
    for (int b = 0; a + b <= needed && !b_pow.is_zero(); ++b) {
      ChainTensor c_pow = b_pow;
      for (int cc = 0; a + b + cc <= needed && !c_pow.is_zero(); ++cc) {
        const EpsScalar coef = f.coefficient({a, b, cc});
        if (!coef.is_zero()) out += coef.shifted(a + b + cc) * mu_apply(c_pow);
        c_pow = alpha_apply(c_pow, 2, 0);
      }
      b_pow = alpha_apply(b_pow, 1, 2);
    }
    a_pow = alpha_apply(a_pow, 0, 1);
  }
  return out;
}

}  // namespace weylver
