#include "weylver/chern_weil.hpp"

#include <stdexcept>

namespace weylver {

namespace {

Rational power_of(Rational base, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

HElement HElement::zero(int n, int N) {
  return {EpsSpMatrix::zero(n), EpsMatrix::Constant(N, N, EpsScalar(0))};
}

bool HElement::is_zero() const {
  if (!sp.is_zero()) return false;
  for (int r = 0; r < gl.rows(); ++r)
    for (int s = 0; s < gl.cols(); ++s)
      if (!gl(r, s).is_zero()) return false;
  return true;
}

HElement operator+(const HElement& a, const HElement& b) { return {a.sp + b.sp, a.gl + b.gl}; }
HElement operator-(const HElement& a, const HElement& b) { return {a.sp - b.sp, a.gl - b.gl}; }
HElement operator*(const EpsScalar& c, const HElement& a) { return {c * a.sp, EpsMatrix(a.gl * c)}; }
bool operator==(const HElement& a, const HElement& b) { return a.sp == b.sp && a.gl == b.gl; }

std::string HElement::to_string() const {
  std::string out = "sp: " + sp_to_quadratic(sp).to_string() + ", gl: [";
  for (int r = 0; r < gl.rows(); ++r) {
    out += r ? "; " : "";
    for (int s = 0; s < gl.cols(); ++s) out += (s ? ", " : "") + gl(r, s).to_string();
  }
  return out + "]";
}

HElement h_bracket(const HElement& a, const HElement& b) {
  EpsMatrix g = a.gl * b.gl - b.gl * a.gl;
  return {commutator(a.sp, b.sp), EpsMatrix(g * EpsScalar::eps(-1))};
}

GlWeylElement to_gl(const HElement& x) {
  const int n = x.n(), N = x.N();
  GlWeylElement out = GlWeylElement::scalar(N, sp_to_quadratic(x.sp));
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      if (!x.gl(r, s).is_zero()) out(r, s) += WeylElement(n, x.gl(r, s));
  return out;
}

namespace {

WeylElement cartan_quadratic(int n, const std::vector<Rational>& t) {
  WeylElement a(n);
  for (int i = 1; i <= static_cast<int>(t.size()); ++i) {
    Exponents e(2 * n, 0);
    e[p_index(i)] = e[q_index(i)] = 1;
    a.add_term(e, EpsScalar(-t[i - 1]));
  }
  return a;
}

}  // namespace

HElement CartanPoint::to_h() const {
  const int n = static_cast<int>(t.size()), N = static_cast<int>(s.size());
  HElement x = HElement::zero(n, N);
  x.sp = quadratic_to_sp(cartan_quadratic(n, t));
  for (int r = 0; r < N; ++r) x.gl(r, r) = s[r];
  return x;
}

GlWeylElement CartanPoint::to_gl(int n) const {
  if (static_cast<int>(t.size()) > n) throw std::invalid_argument("more t-coordinates than n");
  const int N = static_cast<int>(s.size());
  GlWeylElement out = GlWeylElement::scalar(N, cartan_quadratic(n, t));
  for (int r = 0; r < N; ++r) out(r, r) += WeylElement(n, s[r]);
  return out;
}

HElement project_pr(const GlWeylElement& v) {
  const int n = v.n(), N = v.N();
  WeylElement quad(n);
  for (int r = 0; r < N; ++r) quad += v(r, r).y_homogeneous_part(2);
  HElement out = HElement::zero(n, N);
  out.sp = quadratic_to_sp(quad * EpsScalar(make_rational(1, N)));
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s) out.gl(r, s) = eval_at_zero(v(r, s));
  return out;
}

HElement curvature_C(const GlWeylElement& v, const GlWeylElement& w) {
  return h_bracket(project_pr(v), project_pr(w)) - project_pr(lie_bracket(v, w));
}

EpsScalar polarize(const InvariantPoly& p, const std::vector<HElement>& ys) {
  const int j = static_cast<int>(ys.size());
  if (j != p.degree) throw std::invalid_argument("polarization arity must equal the degree");
  if (j == 0) return p.evaluate(HElement::zero(0, 1));
  EpsScalar out;
  for (unsigned mask = 1; mask < (1u << j); ++mask) {
    HElement sum = HElement::zero(ys[0].n(), ys[0].N());
    for (int i = 0; i < j; ++i)
      if (mask >> i & 1u) sum = sum + ys[i];
    const EpsScalar v = p.evaluate(sum);
    out += (j - __builtin_popcount(mask)) % 2 == 0 ? v : -v;
  }
  return out;
}

namespace {

using TraceMonomial = std::vector<int>;
using TraceSeries = std::map<TraceMonomial, Rational>;

int weight(const TraceMonomial& m) {
  int w = 0;
  for (std::size_t k = 0; k < m.size(); ++k) w += 2 * static_cast<int>(k + 1) * m[k];
  return w;
}

TraceSeries multiply(const TraceSeries& a, const TraceSeries& b, int degree) {
  TraceSeries out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      TraceMonomial m(ma.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      if (weight(m) > degree) continue;
      Rational& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
  return out;
}

}  // namespace

std::map<std::vector<int>, Rational> ahat_trace_coefficients(int degree) {
  const int K = std::max(degree / 2, 1);
  // log A^ = sum_k c_k T_k with c_k = -B_2k / (4k (2k)!).
  TraceSeries log_series;
  for (int k = 1; 2 * k <= degree; ++k) {
    TraceMonomial m(K, 0);
    m[k - 1] = 1;
    log_series[m] = -bernoulli(2 * k) / (Rational(4 * k) * factorial(2 * k));
  }
  TraceSeries result{{TraceMonomial(K, 0), Rational(1)}};
  TraceSeries power{{TraceMonomial(K, 0), Rational(1)}};
  for (int r = 1; 2 * r <= degree; ++r) {
    power = multiply(power, log_series, degree);
    for (const auto& [m, c] : power) {
      Rational& slot = result[m];
      slot += c / factorial(r);
    }
  }
  return result;
}

InvariantPoly ahat_ch_component(int j) {
  const auto coefficients = ahat_trace_coefficients(j);
  return {j, [j, coefficients](const HElement& x) {
            const EpsMatrix x1 = x.sp.matrix() * EpsScalar::eps();
            const int dim = static_cast<int>(x1.rows());
            // Power sums tr((eps X_1)^{2k}).
            std::vector<EpsScalar> traces;
            EpsMatrix square = x1 * x1, power = EpsMatrix::Identity(dim, dim);
            for (int k = 1; 2 * k <= j; ++k) {
              power = power * square;
              traces.push_back(power.trace());
            }
            std::vector<EpsScalar> ahat(j + 1);
            for (const auto& [m, c] : coefficients) {
              EpsScalar term(c);
              for (std::size_t k = 0; k < m.size(); ++k)
                for (int e = 0; e < m[k]; ++e) term *= traces[k];
              ahat[weight(m)] += term;
            }
            const int N = x.N();
            EpsMatrix gpow = EpsMatrix::Identity(N, N);
            EpsScalar out;
            for (int b = 0; b <= j; ++b) {
              if (b > 0) gpow = gpow * x.gl;
              if (!ahat[j - b].is_zero()) out += ahat[j - b] * gpow.trace() / factorial(b);
            }
            return out;
          }};
}

EpsScalar chi_eval(const InvariantPoly& p, const WedgeTuple& args) {
  const int q = p.degree, m = static_cast<int>(args.size());
  if (m != 2 * q) throw std::invalid_argument("chi(P) of degree q takes 2q arguments");
  if (q == 0) return p.evaluate(HElement::zero(0, 1));
  std::map<std::pair<int, int>, HElement> curvature;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) curvature.emplace(std::pair{a, b}, curvature_C(args[a], args[b]));
  EpsScalar out;
  for (const auto& perm : all_permutations(m)) {
    std::vector<HElement> ys;
    bool ordered = true;
    for (int i = 0; i < q && ordered; ++i) {
      const int a = perm.image[2 * i], b = perm.image[2 * i + 1];
      if (a > b) ordered = false;
      else ys.push_back(curvature.at({a, b}));
    }
    if (!ordered) continue;
    const EpsScalar v = polarize(p, ys);
    out += perm.sign == 1 ? v : -v;
  }
  return out / factorial(q);
}

std::vector<SpecialVector> special_vectors(int n, int N) {
  std::vector<SpecialVector> out;
  auto add = [&](std::string label, int i, GlWeylElement value) {
    GlWeylElement dq(n, N);
    for (int r = 0; r < N; ++r)
      for (int s = 0; s < N; ++s) dq(r, s) = partial_derivative(value(r, s), q_index(i));
    out.push_back({std::move(label), i, std::move(value), std::move(dq)});
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Exponents e(2 * n, 0);
      ++e[q_index(i)];
      ++e[q_index(j)];
      ++e[p_index(j)];
      const EpsScalar c = i == j ? EpsScalar(make_rational(1, 2)) : EpsScalar(1);
      add("u" + std::to_string(i) + std::to_string(j), i,
          GlWeylElement::scalar(N, WeylElement::monomial(n, e, c)));
    }
    for (int r = 1; r <= N; ++r)
      add("v" + std::to_string(i) + std::to_string(r), i,
          GlWeylElement::elementary(N, r - 1, r - 1, WeylElement::q(n, i)));
  }
  return out;
}

std::vector<std::vector<SpecialVector>> admissible_tuples(int n, int N) {
  const auto all = special_vectors(n, N);
  std::vector<std::vector<SpecialVector>> choices(n);
  for (const auto& v : all) {
    // u_jk is admissible for slot j when k <= j; v_jr always.
    const int second = v.label[2] - '0';
    if (v.label[0] == 'v' || second <= v.i) choices[v.i - 1].push_back(v);
  }
  std::vector<std::vector<SpecialVector>> out{{}};
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<SpecialVector>> next;
    for (const auto& prefix : out)
      for (const auto& v : choices[j]) {
        auto t = prefix;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

Rational comb_factor(const std::vector<int>& l) {
  int n = 0;
  for (std::size_t j = 0; j < l.size(); ++j) n += static_cast<int>(j + 1) * l[j];
  Rational den(1);
  for (std::size_t j = 0; j < l.size(); ++j) {
    den *= factorial(l[j]);
    if (j > 0)
      for (int e = 0; e < l[j]; ++e) den *= Rational(2 * static_cast<int>(j + 1));
  }
  return factorial(n) / den;
}

namespace {

void partitions(int remaining, int part, std::vector<int>& l, std::vector<std::vector<int>>& out) {
  if (part == 0) {
    if (remaining == 0) out.push_back(l);
    return;
  }
  for (int k = 0; k * part <= remaining; ++k) {
    l[part - 1] = k;
    partitions(remaining - k * part, part - 1, l, out);
  }
  l[part - 1] = 0;
}

}  // namespace

UPolynomial p_n_graphsum_polynomial(int n, int m, int N) {
  const int vars = m + N;
  UPolynomial out(vars);
  std::vector<std::vector<int>> ls;
  if (n == 0) {
    ls.push_back({});
  } else {
    std::vector<int> l(n, 0);
    partitions(n, n, l, ls);
  }
  for (const auto& l : ls) {
    UPolynomial term(vars, EpsScalar(comb_factor(l)));
    for (int j = 2; j <= n; ++j) {
      if (l[j - 1] == 0) continue;
      const Rational I = closed_form_I(j);
      if (I == 0) {
        term = UPolynomial(vars);
        break;
      }
      // (2 I_j / 2^j) sum_i (eps t_i)^j
      UPolynomial cycle(vars);
      for (int i = 0; i < m; ++i) {
        Exponents e(vars, 0);
        e[i] = j;
        cycle.add_term(e, EpsScalar::monomial(j, Rational(2) * I / power_of(Rational(2), j)));
      }
      term = term * pow(cycle, l[j - 1]);
    }
    if (term.is_zero()) continue;
    UPolynomial trace_part(vars);
    for (int r = 0; r < N; ++r) {
      Exponents e(vars, 0);
      e[m + r] = l.empty() ? 0 : l[0];
      trace_part.add_term(e, EpsScalar(1));
    }
    out += term * trace_part;
  }
  return out;
}

EpsScalar p_n_cartan_graphsum(int n, const CartanPoint& x) {
  const int m = static_cast<int>(x.t.size());
  std::vector<EpsScalar> point;
  for (const auto& t : x.t) point.emplace_back(t);
  for (const auto& s : x.s) point.push_back(s);
  return p_n_graphsum_polynomial(n, m, static_cast<int>(x.s.size())).evaluate(point);
}

namespace {

// One summand of a Cartan-span argument: E_rr (x) 1 (r >= 0) or 1 (x) q_i p_i (r = -1).
struct CartanPiece {
  int r;
  Exponents monomial;
  EpsScalar coefficient;
};

std::vector<CartanPiece> cartan_pieces(const GlWeylElement& a) {
  const int n = a.n(), N = a.N();
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      if (r != s && !a(r, s).is_zero()) throw std::invalid_argument("argument is not in the Cartan span");
  std::vector<CartanPiece> out;
  const WeylElement quad = a(0, 0).y_homogeneous_part(2);
  for (const auto& [e, c] : quad.terms()) {
    for (int i = 1; i <= n; ++i)
      if (e[p_index(i)] != e[q_index(i)]) throw std::invalid_argument("argument is not in the Cartan span");
    out.push_back({-1, e, c});
  }
  for (int r = 0; r < N; ++r) {
    const WeylElement rest = a(r, r) - quad;
    for (const auto& [e, c] : rest.terms()) {
      bool constant = true;
      for (int x : e) constant = constant && x == 0;
      if (!constant) throw std::invalid_argument("argument is not in the Cartan span");
      out.push_back({r, e, c});
    }
  }
  return out;
}

}  // namespace

EpsScalar p_n_cartan_integral(int n, const std::vector<GlWeylElement>& args) {
  if (static_cast<int>(args.size()) != n) throw std::invalid_argument("P_n takes n arguments");
  if (n == 0) throw std::invalid_argument("P_n needs n >= 1");
  const int N = args[0].N();
  std::vector<std::vector<CartanPiece>> pieces;
  for (const auto& a : args) pieces.push_back(cartan_pieces(a));

  std::vector<int> slot_var(n);
  for (int i = 0; i < n; ++i) slot_var[i] = i;
  std::vector<OrderedRegion> regions;
  std::vector<PairingKernel> kernels;
  for (const auto& perm : all_permutations(n)) {
    regions.push_back(OrderedRegion::from_order(perm.image));
    kernels.emplace_back(PairWeights::psi_on_region(slot_var, regions.back()));
  }
  std::map<MonomialTuple, EpsScalar> integrals;
  auto integral = [&](const MonomialTuple& tuple) {
    auto it = integrals.find(tuple);
    if (it != integrals.end()) return it->second;
    EpsScalar v;
    for (std::size_t k = 0; k < regions.size(); ++k)
      v += integrate_over_region(kernels[k].integrand(tuple), regions[k]);
    return integrals[tuple] = v;
  };

  EpsScalar out;
  MonomialTuple tuple(n);
  auto walk = [&](auto&& self, int pos, int r, EpsScalar coef) -> void {
    if (pos == n) {
      out += coef * integral(tuple) * Rational(r < 0 ? N : 1);
      return;
    }
    for (const auto& piece : pieces[pos]) {
      // tr(E_r1 .. E_rk) vanishes unless all r agree.
      if (piece.r >= 0 && r >= 0 && piece.r != r) continue;
      tuple[pos] = piece.monomial;
      self(self, pos + 1, piece.r >= 0 ? piece.r : r, coef * piece.coefficient);
    }
  };
  walk(walk, 0, -1, EpsScalar(1));
  return out;
}

RrhCase rrh_check(int n, int N, const std::vector<SpecialVector>& tuple, const TauOptions& options) {
  if (static_cast<int>(tuple.size()) != n) throw std::invalid_argument("tuple must have n vectors");
  RrhCase out;
  WedgeTuple args;
  std::vector<HElement> derivatives;
  std::vector<GlWeylElement> raw;
  for (int j = 1; j <= n; ++j) {
    args.push_back(GlWeylElement::scalar(N, WeylElement::p(n, j)));
    args.push_back(tuple[j - 1].value);
    out.labels.push_back("p" + std::to_string(j));
    out.labels.push_back(tuple[j - 1].label);
    derivatives.push_back(project_pr(tuple[j - 1].dq));
    raw.push_back(tuple[j - 1].dq);
  }
  const InvariantPoly p = ahat_ch_component(n);
  out.lhs = theta_eval(n, args, GlWeylElement::scalar(N, WeylElement(n, 1)), options);
  const EpsScalar chi = chi_eval(p, args);
  out.chi_rhs = n % 2 == 0 ? chi : -chi;
  out.polar_rhs = polarize(p, derivatives);
  out.integral_rhs = p_n_cartan_integral(n, raw);
  out.pass = out.lhs == out.chi_rhs && out.lhs == out.polar_rhs && out.lhs == out.integral_rhs;
  return out;
}

namespace {

// Taylor coefficients of (x/2)/sinh(x/2) up to x^degree, by inverting
// sinh(x/2)/(x/2) = sum_k x^2k / (4^k (2k+1)!).
std::vector<Rational> ahat_one_variable(int degree) {
  std::vector<Rational> g(degree + 1, Rational(0)), f(degree + 1, Rational(0));
  for (int k = 0; 2 * k <= degree; ++k) g[2 * k] = Rational(1) / (power_of(Rational(4), k) * factorial(2 * k + 1));
  for (int d = 0; d <= degree; ++d) {
    Rational acc = d == 0 ? Rational(1) : Rational(0);
    for (int k = 1; k <= d; ++k) acc -= g[k] * f[d - k];
    f[d] = acc / g[0];
  }
  return f;
}

}  // namespace

GenfunReport genfun_check(int max_n, int m, int N) {
  const int vars = m + N;
  GenfunReport out{UPolynomial(vars), UPolynomial(vars), false};
  for (int k = 0; k <= max_n; ++k)
    out.graph_series += p_n_graphsum_polynomial(k, m, N) * EpsScalar(Rational(1) / factorial(k));

  const auto f = ahat_one_variable(max_n);
  UPolynomial product(vars, EpsScalar(1));
  for (int i = 0; i < m; ++i) {
    UPolynomial factor(vars);
    for (int d = 0; d <= max_n; ++d) {
      if (f[d] == 0) continue;
      Exponents e(vars, 0);
      e[i] = d;
      factor.add_term(e, EpsScalar::monomial(d, f[d]));
    }
    product = (product * factor).truncated(max_n);
  }
  UPolynomial exps(vars);
  for (int r = 0; r < N; ++r)
    for (int d = 0; d <= max_n; ++d) {
      Exponents e(vars, 0);
      e[m + r] = d;
      exps.add_term(e, EpsScalar(Rational(1) / factorial(d)));
    }
  out.product_series = (product * exps).truncated(max_n);
  out.pass = out.graph_series == out.product_series;
  return out;
}

}  // namespace weylver
