#include "weylver/weyl_element.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weylver {

WeylElement::WeylElement(int n, const EpsScalar& constant) : n_(n) {
  if (!constant.is_zero()) terms_.emplace(Exponents(2 * n, 0), constant);
}

WeylElement WeylElement::monomial(int n, const Exponents& e, const EpsScalar& c) {
  if (static_cast<int>(e.size()) != 2 * n) throw std::invalid_argument("exponent length != 2n");
  WeylElement out(n);
  out.add_term(e, c);
  return out;
}

WeylElement WeylElement::variable(int n, int v) {
  if (v < 0 || v >= 2 * n) throw std::out_of_range("variable index out of range");
  Exponents e(2 * n, 0);
  e[v] = 1;
  return monomial(n, e);
}

bool WeylElement::is_scalar() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int x) { return x == 0; });
  });
}

EpsScalar WeylElement::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? EpsScalar() : it->second;
}

void WeylElement::add_term(const Exponents& e, const EpsScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int WeylElement::y_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

WeylElement WeylElement::y_homogeneous_part(int d) const {
  WeylElement out(n_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.terms_.emplace(e, c);
  return out;
}

namespace {

void check_same_n(const WeylElement& a, const WeylElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Weyl algebra dimension mismatch");
}

}  // namespace

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && n_ == 0) n_ = other.n_;
  check_same_n(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && n_ == 0) n_ = other.n_;
  check_same_n(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const EpsScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

WeylElement WeylElement::commutative_product(const WeylElement& other) const {
  check_same_n(*this, other);
  WeylElement out(n_);
  Exponents e(2 * n_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (int v = 0; v < 2 * n_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool operator<(const WeylElement& a, const WeylElement& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::string render_monomial(const Exponents& e) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += (v % 2 == 0 ? "p" : "q") + std::to_string(v / 2 + 1);
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  // Highest degree first reads more naturally.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return std::accumulate(a->first.begin(), a->first.end(), 0) >
           std::accumulate(b->first.begin(), b->first.end(), 0);
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const std::string mono = render_monomial(t->first);
    const EpsScalar& c = t->second;
    // A single-term coefficient can be written as a signed product; otherwise
    // expand into one summand per eps power.
    for (const auto& [ee, cc] : c.terms()) {
      const bool negative = cc < 0;
      const Rational mag = negative ? Rational(-cc) : cc;
      std::string factor;
      if (mag != 1 || (ee == 0 && mono.empty())) factor = weylver::to_string(mag);
      if (ee != 0) {
        if (!factor.empty()) factor += "*";
        factor += "e";
        if (ee != 1) factor += "^" + std::to_string(ee);
      }
      if (!mono.empty()) {
        if (!factor.empty()) factor += "*";
        factor += mono;
      }
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      out += factor;
      first = false;
    }
  }
  return out;
}

EpsScalar eps_arith_add(const EpsScalar& a, const EpsScalar& b) { return a + b; }
EpsScalar eps_arith_mul(const EpsScalar& a, const EpsScalar& b) { return a * b; }
EpsScalar eps_arith_neg(const EpsScalar& a) { return -a; }

WeylElement partial_derivative(const WeylElement& f, int v) {
  if (v < 0 || v >= f.num_vars()) throw std::out_of_range("variable index out of range");
  WeylElement out(f.n());
  for (const auto& [e, c] : f.terms()) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    out.add_term(d, c * Rational(e[v]));
  }
  return out;
}

EpsScalar eval_at_zero(const WeylElement& f) { return f.coefficient(Exponents(f.num_vars(), 0)); }

namespace {

// m!/(m-d)!, zero when d > m.
Rational falling(int m, int d) {
  if (d > m) return Rational(0);
  Integer r = 1;
  for (int i = 0; i < d; ++i) r *= m - i;
  return Rational(r);
}

// Accumulates into `out` the Moyal contributions of one monomial pair.
// Per pair (p_r, q_r) the bidifferential operator factorizes as
// exp(eps/2 d_p (x) d_q) exp(-eps/2 d_q (x) d_p); j_r and l_r count the two
// kinds of contractions. When `order` >= 0 only total order j+l == order is kept.
void moyal_monomials(int n, const Exponents& a, const Exponents& b, const EpsScalar& coef,
                     int order, bool with_eps, WeylElement& out) {
  std::vector<int> j(n, 0), l(n, 0);
  Exponents e(2 * n);
  auto emit = [&](int total, const Rational& weight) {
    for (int r = 0; r < n; ++r) {
      const int pv = 2 * r, qv = 2 * r + 1;
      e[pv] = a[pv] - j[r] + b[pv] - l[r];
      e[qv] = a[qv] - l[r] + b[qv] - j[r];
    }
    EpsScalar c = coef * weight;
    if (with_eps) c = c.shifted(total);
    out.add_term(e, c);
  };
  // Depth-first over r.
  auto rec = [&](auto&& self, int r, int total, Rational weight) -> void {
    if (order >= 0 && total > order) return;
    if (r == n) {
      if (order < 0 || total == order) emit(total, weight);
      return;
    }
    const int pv = 2 * r, qv = 2 * r + 1;
    const int jmax = std::min(a[pv], b[qv]);
    const int lmax = std::min(a[qv], b[pv]);
    for (int jj = 0; jj <= jmax; ++jj)
      for (int ll = 0; ll <= lmax; ++ll) {
        j[r] = jj;
        l[r] = ll;
        Rational w = weight * falling(a[pv], jj) * falling(b[qv], jj) * falling(a[qv], ll) *
                     falling(b[pv], ll) / (factorial(jj) * factorial(ll));
        for (int k = 0; k < jj + ll; ++k) w /= 2;
        if (ll % 2 == 1) w = -w;
        self(self, r + 1, total + jj + ll, w);
      }
  };
  rec(rec, 0, 0, Rational(1));
}

}  // namespace

WeylElement moyal_order(const WeylElement& f, const WeylElement& g, int k) {
  check_same_n(f, g);
  WeylElement out(f.n());
  for (const auto& [ea, ca] : f.terms())
    for (const auto& [eb, cb] : g.terms()) moyal_monomials(f.n(), ea, eb, ca * cb, k, false, out);
  return out;
}

WeylElement moyal(const WeylElement& f, const WeylElement& g) {
  check_same_n(f, g);
  WeylElement out(f.n());
  for (const auto& [ea, ca] : f.terms())
    for (const auto& [eb, cb] : g.terms()) moyal_monomials(f.n(), ea, eb, ca * cb, -1, true, out);
  return out;
}

WeylElement bracket(const WeylElement& f, const WeylElement& g) {
  check_same_n(f, g);
  const int max_order = std::max(0, std::min(f.y_degree(), g.y_degree()));
  // The order-0 part of the commutator is fg - gf and must cancel.
  const WeylElement zeroth = moyal_order(f, g, 0) - moyal_order(g, f, 0);
  if (!zeroth.is_zero()) throw std::logic_error("Moyal commutator has an eps^0 term");
  WeylElement out(f.n());
  for (int k = 1; k <= max_order; ++k) {
    WeylElement diff = moyal_order(f, g, k) - moyal_order(g, f, k);
    out += diff * EpsScalar::eps(k - 1);
  }
  return out;
}

std::optional<int> graded_degree(const WeylElement& f) {
  std::optional<int> degree;
  for (const auto& [e, c] : f.terms()) {
    const int yd = std::accumulate(e.begin(), e.end(), 0);
    for (const auto& [ee, cc] : c.terms()) {
      const int d = yd + 2 * ee;
      if (degree && *degree != d) return std::nullopt;
      degree = d;
    }
  }
  return degree;
}

}  // namespace weylver
