#include "weylver/lie.hpp"

#include <stdexcept>

namespace weylver {

GlWeylElement::GlWeylElement(int n, int N) : n_(n), N_(N), entries_(N * N, WeylElement(n)) {
  if (N < 1) throw std::invalid_argument("gl_N needs N >= 1");
}

GlWeylElement GlWeylElement::scalar(int N, const WeylElement& a) {
  GlWeylElement out(a.n(), N);
  for (int r = 0; r < N; ++r) out(r, r) = a;
  return out;
}

GlWeylElement GlWeylElement::elementary(int N, int r, int s, const WeylElement& a) {
  if (r < 0 || s < 0 || r >= N || s >= N) throw std::out_of_range("matrix index");
  GlWeylElement out(a.n(), N);
  out(r, s) = a;
  return out;
}

GlWeylElement GlWeylElement::constant(int n, const std::vector<std::vector<EpsScalar>>& m) {
  const int N = static_cast<int>(m.size());
  GlWeylElement out(n, N);
  for (int r = 0; r < N; ++r) {
    if (static_cast<int>(m[r].size()) != N) throw std::invalid_argument("matrix must be square");
    for (int s = 0; s < N; ++s) out(r, s) = WeylElement(n, m[r][s]);
  }
  return out;
}

bool GlWeylElement::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

GlWeylElement GlWeylElement::padded(int N_prime) const {
  if (N_prime < N_) throw std::invalid_argument("cannot pad to a smaller size");
  GlWeylElement out(n_, N_prime);
  for (int r = 0; r < N_; ++r)
    for (int s = 0; s < N_; ++s) out(r, s) = (*this)(r, s);
  return out;
}

namespace {

void check_same(const GlWeylElement& x, const GlWeylElement& y) {
  if (x.n() != y.n() || x.N() != y.N()) throw std::invalid_argument("gl_N(A) dimension mismatch");
}

}  // namespace

GlWeylElement& GlWeylElement::operator+=(const GlWeylElement& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

GlWeylElement& GlWeylElement::operator-=(const GlWeylElement& other) {
  check_same(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

GlWeylElement& GlWeylElement::operator*=(const EpsScalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

std::string GlWeylElement::to_string() const {
  if (N_ == 1) return entries_[0].to_string();
  std::string out = "[";
  for (int r = 0; r < N_; ++r) {
    out += r ? "; " : "";
    for (int s = 0; s < N_; ++s) out += (s ? ", " : "") + (*this)(r, s).to_string();
  }
  return out + "]";
}

GlWeylElement product(const GlWeylElement& x, const GlWeylElement& y) {
  check_same(x, y);
  GlWeylElement out(x.n(), x.N());
  for (int r = 0; r < x.N(); ++r)
    for (int k = 0; k < x.N(); ++k) {
      if (x(r, k).is_zero()) continue;
      for (int s = 0; s < x.N(); ++s)
        if (!y(k, s).is_zero()) out(r, s) += moyal(x(r, k), y(k, s));
    }
  return out;
}

GlWeylElement lie_bracket(const GlWeylElement& x, const GlWeylElement& y) {
  return (product(x, y) - product(y, x)) * EpsScalar::eps(-1);
}

namespace {

WedgeTuple without(const WedgeTuple& args, int i, int j = -1) {
  WedgeTuple out;
  for (int k = 0; k < static_cast<int>(args.size()); ++k)
    if (k != i && k != j) out.push_back(args[k]);
  return out;
}

}  // namespace

EpsScalar d_lie_eval(const DualCochain& c, const WedgeTuple& args, const GlWeylElement& target) {
  const int m = static_cast<int>(args.size());
  EpsScalar out;
  for (int i = 0; i < m; ++i) {
    // (a . xi)(x) = -xi([a, x]); sign (-1)^{i-1} with 1-based i.
    const EpsScalar v = c(without(args, i), lie_bracket(args[i], target));
    out += i % 2 == 0 ? -v : v;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      WedgeTuple rest = without(args, i, j);
      rest.insert(rest.begin(), lie_bracket(args[i], args[j]));
      const EpsScalar v = c(rest, target);
      out += (i + j) % 2 == 0 ? v : -v;
    }
  return out;
}

EpsScalar d_lie_eval(const ScalarCochain& c, const WedgeTuple& args) {
  const int m = static_cast<int>(args.size());
  EpsScalar out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      WedgeTuple rest = without(args, i, j);
      rest.insert(rest.begin(), lie_bracket(args[i], args[j]));
      const EpsScalar v = c(rest);
      out += (i + j) % 2 == 0 ? v : -v;
    }
  return out;
}

EpsScalar cup_product(const ScalarCochain& c, int p, const ScalarCochain& c_prime, int q,
                      const WedgeTuple& args) {
  if (static_cast<int>(args.size()) != p + q) throw std::invalid_argument("cup product arity mismatch");
  EpsScalar out;
  // A shuffle is determined by the p-subset placed first.
  for (unsigned mask = 0; mask < (1u << (p + q)); ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    std::vector<int> image;
    WedgeTuple first, second;
    for (int k = 0; k < p + q; ++k)
      if (mask >> k & 1u) {
        image.push_back(k);
        first.push_back(args[k]);
      }
    for (int k = 0; k < p + q; ++k)
      if (!(mask >> k & 1u)) {
        image.push_back(k);
        second.push_back(args[k]);
      }
    const EpsScalar v = c(first) * c_prime(second);
    out += permutation_sign(image) == 1 ? v : -v;
  }
  return out;
}

ChainTensor phi_n_chain(const WedgeTuple& args, const GlWeylElement& target) {
  const int k = static_cast<int>(args.size());
  const int n = target.n(), N = target.N();
  for (const auto& a : args) check_same(a, target);
  ChainTensor chain(n, k);
  std::vector<WeylElement> slots(k + 1);
  for (const auto& perm : all_permutations(k)) {
    const EpsScalar sign(perm.sign);
    // Walk the trace tr(M_0 M_sigma(1) .. M_sigma(k)) through matching indices.
    auto walk = [&](auto&& self, int pos, int start, int col) -> void {
      if (pos > k) return;
      const GlWeylElement& m = args[perm.image[pos - 1]];
      for (int s = 0; s < N; ++s) {
        const WeylElement& a = m(col, s);
        if (a.is_zero()) continue;
        if (pos == k && s != start) continue;
        slots[pos] = a;
        if (pos == k)
          chain.add_elementary(slots, sign);
        else
          self(self, pos + 1, start, s);
      }
    };
    for (int r = 0; r < N; ++r)
      for (int s = 0; s < N; ++s) {
        if (target(r, s).is_zero()) continue;
        slots[0] = target(r, s);
        if (k == 0) {
          if (r == s) chain.add_elementary(slots, sign);
          continue;
        }
        walk(walk, 1, r, s);
      }
  }
  return chain;
}

EpsScalar phi_n_apply(const HochschildCochain& tau, const WedgeTuple& args, const GlWeylElement& target) {
  return tau(phi_n_chain(args, target));
}

EpsScalar theta_eval(int n, const WedgeTuple& args, const GlWeylElement& target, const TauOptions& options) {
  if (static_cast<int>(args.size()) != 2 * n) throw std::invalid_argument("Theta_2n takes 2n arguments");
  if (target.n() != n) throw std::invalid_argument("dimension mismatch");
  return phi_n_apply([&](const ChainTensor& c) { return tau_eval(n, c, options); }, args, target);
}

WeylElement horizontal_jet(const WeylElement& f, const std::vector<Rational>& x) {
  const int n = f.n();
  if (static_cast<int>(x.size()) != 2 * n) throw std::invalid_argument("point must have 2n coordinates");
  WeylElement out(n);
  for (const auto& [e, c] : f.terms()) {
    // prod_v (x_v + y_v)^{e_v}, expanded binomially.
    WeylElement term(n, c);
    for (int v = 0; v < 2 * n; ++v) {
      if (e[v] == 0) continue;
      WeylElement factor(n);
      for (int j = 0; j <= e[v]; ++j) {
        Exponents m(2 * n, 0);
        m[v] = j;
        Rational coef = binomial(e[v], j);
        for (int i = 0; i < e[v] - j; ++i) coef *= x[v];
        factor.add_term(m, coef);
      }
      term = term.commutative_product(factor);
    }
    out += term;
  }
  return out;
}

EpsScalar flat_trace_density(int n, const WeylElement& f, const std::vector<Rational>& x) {
  if (f.n() != n) throw std::invalid_argument("dimension mismatch");
  const GlWeylElement jet = GlWeylElement::scalar(1, horizontal_jet(f, x));
  WedgeTuple frame;
  for (int i = 1; i <= n; ++i) {
    frame.push_back(GlWeylElement::scalar(1, WeylElement::q(n, i)));
    frame.push_back(GlWeylElement::scalar(1, -WeylElement::p(n, i)));
  }
  EpsScalar wedge;
  for (const auto& perm : all_permutations(2 * n)) {
    WedgeTuple args;
    for (int s : perm.image) args.push_back(frame[s]);
    const EpsScalar v = theta_eval(n, args, jet);
    wedge += perm.sign == 1 ? v : -v;
  }
  const Rational sign = n % 2 == 0 ? 1 : -1;
  // (-1)^n / (2n)! from psi_D, and (-1)^n from dx_1 ^ .. ^ dx_2n = (-1)^n dq ^ dp.
  return wedge * (sign * sign / factorial(2 * n));
}

}  // namespace weylver
