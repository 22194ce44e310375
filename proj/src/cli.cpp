#include "weylver/cli.hpp"

#include "weylver/chern_weil.hpp"
#include "weylver/integrate.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace weylver {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : s_(text), n_(n) {}

  std::vector<std::vector<WeylElement>> wedge() {
    std::vector<std::vector<WeylElement>> out{tensor()};
    while (accept(';')) out.push_back(tensor());
    finish();
    return out;
  }

  std::vector<WeylElement> tensor() {
    std::vector<WeylElement> out{expr()};
    while (accept('|')) out.push_back(expr());
    return out;
  }

  WeylElement expr() {
    skip();
    const bool negative = accept('-');
    WeylElement out = term();
    if (negative) out = -out;
    for (;;) {
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out -= term();
      else
        return out;
    }
  }

  void finish() {
    skip();
    if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  int small_int(const std::string& d, std::size_t at) {
    if (d.size() > 6) throw ParseError(at, "exponent too large");
    return std::stoi(d);
  }

  WeylElement term() {
    WeylElement out = atom();
    while (accept('*')) out = out.commutative_product(atom());
    return out;
  }

  WeylElement atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = digits();
      if (accept('/')) {
        const std::size_t at = pos_;
        const std::string den = digits();
        if (std::all_of(den.begin(), den.end(), [](char x) { return x == '0'; }))
          throw ParseError(at, "zero denominator");
        text += "/" + den;
      }
      return WeylElement(n_, EpsScalar(parse_rational(text)));
    }
    if (c == 'e') {
      ++pos_;
      int k = 1;
      if (accept('^')) {
        const bool negative = accept('-');
        const std::size_t at = pos_;
        k = small_int(digits(), at);
        if (negative) k = -k;
      }
      return WeylElement(n_, EpsScalar::eps(k));
    }
    if (c == 'p' || c == 'q') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError(pos_, "expected a variable index");
      const std::string idx = digits();
      const std::string name = c + idx;
      if (idx.size() > 3 || std::stoi(idx) < 1 || std::stoi(idx) > n_)
        throw ParseError(start, "unknown variable " + name);
      const int i = std::stoi(idx);
      int k = 1;
      if (accept('^')) {
        const std::size_t at = pos_;
        k = small_int(digits(), at);
      }
      Exponents e(2 * n_, 0);
      e[c == 'p' ? p_index(i) : q_index(i)] = k;
      return WeylElement::monomial(n_, e);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylElement parse_expression(std::string_view text, int n) {
  Parser p(text, n);
  WeylElement out = p.expr();
  p.finish();
  return out;
}

ChainTensor parse_tensor(std::string_view text, int n) {
  Parser p(text, n);
  const auto slots = p.tensor();
  p.finish();
  return ChainTensor::elementary(slots);
}

std::vector<std::vector<WeylElement>> parse_wedge(std::string_view text, int n) {
  return Parser(text, n).wedge();
}

WedgeTuple parse_wedge_tuple(std::string_view text, int n, int N) {
  WedgeTuple out;
  for (const auto& slot : parse_wedge(text, n)) {
    if (slot.size() != 1) throw ParseError(0, "wedge slots must be single expressions");
    out.push_back(GlWeylElement::scalar(N, slot[0]));
  }
  return out;
}

nlohmann::json scalar_to_json(const EpsScalar& x) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [e, c] : x.terms()) {
    std::ostringstream s;
    s << boost::multiprecision::numerator(c) << "/" << boost::multiprecision::denominator(c);
    out[std::to_string(e)] = s.str();
  }
  return out;
}

EpsScalar scalar_from_json(const nlohmann::json& j) {
  std::string text = "0";
  for (const auto& [e, c] : j.items()) {
    std::string coef = c.get<std::string>();
    const bool negative = !coef.empty() && coef[0] == '-';
    text += (negative ? " - " : " + ") + coef.substr(negative ? 1 : 0) + "*e^" + e;
  }
  return eval_at_zero(parse_expression(text, 1));
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Context {
  const SuiteParams& params;
  int deg;
  int cases;
  std::vector<CaseResult> out;

  void add(std::string input, CaseValue expected, CaseValue got) {
    const bool pass = expected == got;
    out.push_back({static_cast<int>(out.size()), std::move(input), std::move(expected), std::move(got), pass});
  }
  void add_checked(std::string input, CaseValue expected, CaseValue got, bool pass) {
    out.push_back({static_cast<int>(out.size()), std::move(input), std::move(expected), std::move(got), pass});
  }
};

RandomSpec spec(int n, int max_degree) {
  RandomSpec s;
  s.n = n;
  s.max_degree = max_degree;
  return s;
}

std::vector<WeylElement> quadratic_basis(int n) {
  std::vector<WeylElement> out;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i; j < 2 * n; ++j) {
      Exponents x(2 * n, 0);
      ++x[i];
      ++x[j];
      out.push_back(WeylElement::monomial(n, x));
    }
  return out;
}

std::string render_slots(const std::vector<WeylElement>& slots, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < slots.size(); ++i) out += (i ? sep : "") + slots[i].to_string();
  return out;
}

std::string render_wedge(const WedgeTuple& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? " ; " : "") + args[i].to_string();
  return out;
}

void moyal_assoc(Context& c) {
  RandomWeyl rng(c.params.seed);
  const int n = c.params.n;
  for (int i = 0; i < c.cases; ++i) {
    const auto f = rng.element(n, 0, c.deg, 3, 0, 1), g = rng.element(n, 0, c.deg, 3, 0, 1),
               h = rng.element(n, 0, c.deg, 3, 0, 1);
    const WeylElement assoc = moyal(moyal(f, g), h) - moyal(f, moyal(g, h));
    const WeylElement jacobi = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
    const WeylElement leibniz = bracket(f, moyal(g, h)) - moyal(bracket(f, g), h) - moyal(g, bracket(f, h));
    c.add(render_slots({f, g, h}, " ; "), std::string("assoc 0, jacobi 0, leibniz 0"),
          "assoc " + assoc.to_string() + ", jacobi " + jacobi.to_string() + ", leibniz " + leibniz.to_string());
  }
}

void hochschild_d2(Context& c) {
  RandomWeyl rng(c.params.seed);
  for (int i = 0; i < c.cases; ++i) {
    const int k = 2 + i % 4;
    const auto ch = rng.chain(spec(c.params.n, c.deg), k);
    c.add(ch.to_string(), std::string("0"), hochschild_boundary(hochschild_boundary(ch)).to_string());
  }
}

void tau_cocycle(Context& c) {
  RandomWeyl rng(c.params.seed);
  const int n = c.params.n;
  for (int i = 0; i < c.cases; ++i) {
    const auto ch = rng.chain(spec(n, c.deg), 2 * n + 1);
    c.add(ch.to_string(), EpsScalar(0), tau_eval(n, hochschild_boundary(ch)));
  }
}

void tau_normalization(Context& c) {
  const int n = c.params.n;
  c.add("c_" + std::to_string(2 * n), EpsScalar(1), tau_eval(n, canonical_cycle(n)));
}

void tau_sp_invariance(Context& c) {
  RandomWeyl rng(c.params.seed);
  const int n = c.params.n;
  const auto basis = quadratic_basis(n);
  for (int i = 0; i < c.cases; ++i) {
    const auto& a = basis[i % basis.size()];
    const auto ch = rng.chain(spec(n, c.deg), 2 * n);
    EpsScalar sum;
    for (const auto& [t, coef] : ch.terms()) {
      const auto slots = ch.slots_of(t);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        auto x = slots;
        x[s] = bracket(a, slots[s]);
        sum += tau_eval(n, ChainTensor::elementary(x, coef));
      }
    }
    c.add(a.to_string() + " on " + ch.to_string(), EpsScalar(0), sum);
  }
}

void tau_property_iii(Context& c) {
  RandomWeyl rng(c.params.seed);
  const int n = c.params.n;
  const auto basis = quadratic_basis(n);
  for (int i = 0; i < c.cases; ++i) {
    const auto& a = basis[i % basis.size()];
    const auto ch = rng.chain(spec(n, c.deg), 2 * n - 1);
    EpsScalar sum;
    for (const auto& [t, coef] : ch.terms()) {
      const auto slots = ch.slots_of(t);
      for (std::size_t s = 1; s <= slots.size(); ++s) {
        auto x = slots;
        x.insert(x.begin() + s, a);
        const EpsScalar v = tau_eval(n, ChainTensor::elementary(x, coef));
        sum += s % 2 == 0 ? v : -v;
      }
    }
    c.add(a.to_string() + " into " + ch.to_string(), EpsScalar(0), sum);
  }
}

void tau_permutation(Context& c) {
  RandomWeyl rng(c.params.seed);
  const int n = c.params.n;
  const auto perms = all_permutations(2 * n);
  for (int i = 0; i < c.cases; ++i) {
    RandomSpec s = spec(n, c.deg);
    s.max_terms = 1;
    const auto ch = rng.chain(s, 2 * n);
    const auto& sigma = perms[rng.uniform(0, static_cast<int>(perms.size()) - 1)];
    const auto inv = inverse_permutation(sigma.image);
    ChainTensor permuted(n, 2 * n);
    for (const auto& [t, coef] : ch.terms()) {
      MonomialTuple u = t;
      for (int k = 0; k < 2 * n; ++k) u[k + 1] = t[inv[k] + 1];
      permuted.add_term(u, coef);
    }
    const EpsScalar rhs = tau_sigma_eval(n, sigma.image, ch);
    std::string perm;
    for (int k : sigma.image) perm += std::to_string(k + 1);
    c.add("sigma " + perm + " on " + ch.to_string(), sigma.sign == 1 ? rhs : -rhs, tau_eval(n, permuted));
  }
}

void tau_closed_form(Context& c) {
  const auto one = WeylElement(1, 1), p = WeylElement::p(1, 1), q = WeylElement::q(1, 1);
  const auto r1 = ChainTensor::elementary({one, p, q});
  const auto r2 = ChainTensor::elementary({p, q, p.commutative_product(q)});
  c.add("1 | p1 | q1", EpsScalar(make_rational(1, 2)), tau_closed_form_n1(r1));
  c.add("p1 | q1 | p1*q1", EpsScalar::monomial(1, make_rational(1, 12)), tau_closed_form_n1(r2));
  RandomWeyl rng(c.params.seed);
  for (int i = 0; i < c.cases; ++i) {
    const auto ch = rng.chain(spec(1, c.deg), 2);
    c.add(ch.to_string(), tau_eval(1, ch), tau_closed_form_n1(ch));
  }
}

GlWeylElement random_gl(RandomWeyl& rng, int n, int N, int max_degree, int eps_max) {
  GlWeylElement g(n, N);
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      if (rng.uniform(0, 2) > 0) g(r, s) = rng.element(n, 0, max_degree, 2, 0, eps_max);
  return g;
}

void theta_relative(Context& c) {
  RandomWeyl rng(c.params.seed);
  const int n = c.params.n, N = c.params.N;
  const auto basis = quadratic_basis(n);
  for (int i = 0; i < c.cases; ++i) {
    const auto A = GlWeylElement::scalar(N, basis[rng.uniform(0, static_cast<int>(basis.size()) - 1)]);
    WedgeTuple args;
    for (int k = 0; k < 2 * n; ++k) args.push_back(random_gl(rng, n, N, c.deg, 0));
    const auto f = random_gl(rng, n, N, c.deg, 0);

    auto with = [&](int k, const GlWeylElement& x) {
      auto b = args;
      b[k] = x;
      return b;
    };
    const EpsScalar sp = theta_eval(n, with(0, A), f);
    const EpsScalar centre = theta_eval(n, with(2 * n - 1, GlWeylElement::scalar(N, WeylElement(n, EpsScalar::eps()))), f);
    EpsScalar invariance = theta_eval(n, args, lie_bracket(A, f));
    for (int k = 0; k < 2 * n; ++k) invariance += theta_eval(n, with(k, lie_bracket(A, args[k])), f);
    auto swapped = args;
    std::swap(swapped[0], swapped[1]);
    const EpsScalar antisymmetry = theta_eval(n, swapped, f) + theta_eval(n, args, f);
    c.add("A = " + A.to_string() + "; " + render_wedge(args) + " -> " + f.to_string(),
          std::string("sp 0, centre 0, invariance 0, antisymmetry 0"),
          "sp " + sp.to_string() + ", centre " + centre.to_string() + ", invariance " + invariance.to_string() +
              ", antisymmetry " + antisymmetry.to_string());
  }
}

void theta_normalization(Context& c) {
  for (int n = 1; n <= c.params.n; ++n)
    for (int N = 1; N <= c.params.N; ++N) {
      WedgeTuple args;
      for (int i = 1; i <= n; ++i) {
        args.push_back(GlWeylElement::scalar(N, WeylElement::p(n, i)));
        args.push_back(GlWeylElement::scalar(N, WeylElement::q(n, i)));
      }
      c.add("n=" + std::to_string(n) + " N=" + std::to_string(N) + ": " + render_wedge(args) + " -> 1",
            EpsScalar(N), theta_eval(n, args, GlWeylElement::scalar(N, WeylElement(n, 1))));
    }
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return make_rational(num(rng), den(rng));
}

void flat_trace(Context& c) {
  RandomWeyl rng(c.params.seed);
  std::mt19937_64 points(c.params.seed);
  for (int i = 0; i < c.cases; ++i) {
    const WeylElement f = i == 0 ? WeylElement(1, 1) : rng.element(1, 0, c.deg, 3, 0, 0);
    const std::vector<Rational> x{random_rational(points), random_rational(points)};
    // f(x) by direct substitution.
    EpsScalar value;
    for (const auto& [e, coef] : f.terms()) {
      Rational m(1);
      for (int v = 0; v < 2; ++v)
        for (int k = 0; k < e[v]; ++k) m *= x[v];
      value += coef * m;
    }
    c.add("f = " + f.to_string() + " at (" + to_string(x[0]) + ", " + to_string(x[1]) + ")", value,
          flat_trace_density(1, f, x));
  }
}

void cycle_integrals(Context& c) {
  c.add("I_2 (frozen)", EpsScalar(make_rational(-1, 3)), EpsScalar(closed_form_I(2)));
  c.add("I_4 (frozen)", EpsScalar(make_rational(1, 45)), EpsScalar(closed_form_I(4)));
  for (int j = 2; j <= c.deg; ++j)
    c.add("I_" + std::to_string(j), EpsScalar(closed_form_I(j)), EpsScalar(psi_cycle_integral(j)));
}

void ahat_expansion(Context& c) {
  // Printed assignment of the degree-4 coefficients, checked as printed.
  const auto coef = ahat_trace_coefficients(4);
  c.add("coefficient of tr X^2 (printed -1/48)", EpsScalar(make_rational(-1, 48)), EpsScalar(coef.at({1, 0})));
  c.add("coefficient of tr X^4 (printed 1/4608)", EpsScalar(make_rational(1, 4608)), EpsScalar(coef.at({0, 1})));
  c.add("coefficient of (tr X^2)^2 (printed 1/5760)", EpsScalar(make_rational(1, 5760)),
        EpsScalar(coef.at({2, 0})));
  const int degree = std::max(c.deg, 4);
  const auto g = genfun_check(degree, c.params.n, c.params.N);
  c.add("genfun to total degree " + std::to_string(degree), g.product_series.to_string(), g.graph_series.to_string());
}

CartanPoint random_cartan(std::mt19937_64& rng, int m, int N) {
  CartanPoint x;
  for (int i = 0; i < m; ++i) x.t.push_back(random_rational(rng));
  for (int r = 0; r < N; ++r) x.s.push_back(EpsScalar(random_rational(rng)));
  return x;
}

void pn_crosscheck(Context& c) {
  std::mt19937_64 rng(c.params.seed);
  const int n = c.params.n, N = c.params.N;
  for (int i = 0; i < c.cases; ++i) {
    const CartanPoint x = random_cartan(rng, n, N);
    std::string point = "t = (";
    for (std::size_t k = 0; k < x.t.size(); ++k) point += (k ? ", " : "") + to_string(x.t[k]);
    point += "), s = (";
    for (std::size_t k = 0; k < x.s.size(); ++k) point += (k ? ", " : "") + x.s[k].to_string();
    point += ")";
    for (int k = 1; k <= n; ++k) {
      const EpsScalar graph = p_n_cartan_graphsum(k, x);
      const EpsScalar integral = p_n_cartan_integral(k, std::vector<GlWeylElement>(k, x.to_gl(n)));
      const EpsScalar polar = polarize(ahat_ch_component(k), std::vector<HElement>(k, x.to_h()));
      c.add_checked("P_" + std::to_string(k) + " at " + point + " (graph sum vs integral, polarized)", graph,
                    integral, graph == integral && graph == polar);
    }
  }
}

void rrh(Context& c) {
  const int n = c.params.n, N = c.params.N;
  for (const auto& tuple : admissible_tuples(n, N)) {
    const RrhCase r = rrh_check(n, N, tuple);
    std::string labels;
    for (std::size_t k = 0; k < r.labels.size(); ++k) labels += (k ? " ; " : "") + r.labels[k];
    c.add_checked(labels + " (Theta vs chi, polarized, integral)", r.chi_rhs, r.lhs, r.pass);
  }
  // Frozen values, confirmed against the tau integral.
  const auto sv = special_vectors(n, 1);
  auto pick = [&](const std::string& label) {
    for (const auto& v : sv)
      if (v.label == label) return v;
    throw std::logic_error(label);
  };
  if (n == 1) {
    c.add("p1 ; v11 (frozen)", EpsScalar(1), rrh_check(1, 1, {pick("v11")}).lhs);
    c.add("p1 ; u11 (frozen)", EpsScalar(0), rrh_check(1, 1, {pick("u11")}).lhs);
  }
  if (n == 2) {
    c.add("p1 ; u11 ; p2 ; u21 (frozen)", EpsScalar::monomial(2, make_rational(-1, 12)),
          rrh_check(2, 1, {pick("u11"), pick("u21")}).lhs);
    c.add("p1 ; v11 ; p2 ; v21 (frozen)", EpsScalar(1), rrh_check(2, 1, {pick("v11"), pick("v21")}).lhs);
  }
}

UPolynomial homogeneous_part(const UPolynomial& p, int d) {
  UPolynomial out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    int total = 0;
    for (int x : e) total += x;
    if (total == d) out.add_term(e, c);
  }
  return out;
}

void genfun(Context& c) {
  const auto g = genfun_check(c.deg, c.params.n, c.params.N);
  std::vector<std::string> names;
  for (int i = 1; i <= c.params.n; ++i) names.push_back("t" + std::to_string(i));
  for (int r = 1; r <= c.params.N; ++r) names.push_back("s" + std::to_string(r));
  for (int d = 0; d <= c.deg; ++d)
    c.add("degree " + std::to_string(d), homogeneous_part(g.product_series, d).to_string(names),
          homogeneous_part(g.graph_series, d).to_string(names));
}

struct SuiteEntry {
  SuiteInfo info;
  std::function<void(Context&)> run;
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> table{
      {{"moyal-assoc", "Moyal product associative; eps-bracket satisfies Jacobi and Leibniz", 4, 500}, moyal_assoc},
      {{"hochschild-d2", "Hochschild boundary squares to zero", 3, 50}, hochschild_d2},
      {{"tau-cocycle", "tau_2n vanishes on boundaries", 3, 200}, tau_cocycle},
      {{"tau-normalization", "tau_2n(c_2n) = 1", 0, 1}, tau_normalization},
      {{"tau-sp-invariance", "tau_2n is sp_2n-invariant", 3, 20}, tau_sp_invariance},
      {{"tau-property-iii", "alternating insertion of a quadratic element is annihilated", 3, 20},
       tau_property_iii},
      {{"tau-permutation", "tau(a_0, a_sigma^-1 ..) = sign(sigma) tau_sigma(a_0, a_1, ..)", 3, 20}, tau_permutation},
      {{"tau-closed-form", "n = 1 closed form F agrees with the integral", 4, 100}, tau_closed_form},
      {{"theta-relative", "Theta vanishes on sp and the centre, is h-invariant and alternating", 3, 100},
       theta_relative},
      {{"theta-normalization", "Theta^N_2n(p_1 ^ q_1 ^ ..)(1) = N", 0, 1}, theta_normalization},
      {{"flat-trace", "trace density of the basic example returns f(x)", 5, 50}, flat_trace},
      {{"cycle-integrals", "I_j from the psi-cycle integral matches -B_j 2^j / j!", 8, 1}, cycle_integrals},
      {{"ahat-expansion", "A-roof coefficients as printed, and the generating function to degree 4", 4, 1},
       ahat_expansion},
      {{"pn-crosscheck", "P_n graph sum = cube integral = polarized (A^_eps Ch)_n on the Cartan subalgebra", 0, 50},
       pn_crosscheck},
      {{"rrh", "ev_1 Theta_2n = (-1)^n chi((A^_eps Ch)_n) on special vectors", 0, 1}, rrh},
      {{"genfun", "sum P_n/n! = prod (eps t/2)/sinh(eps t/2) sum exp(s_r)", 6, 1}, genfun},
  };
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suite_table() {
  static const std::vector<SuiteInfo> table = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return table;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  const auto it = std::find_if(entries().begin(), entries().end(), [&](const auto& e) { return e.info.name == name; });
  if (it == entries().end()) throw std::invalid_argument("unknown suite: " + name);
  if (params.n < 1 || params.N < 1) throw std::invalid_argument("n and N must be positive");
  if (!params.override_caps && (params.n > 2 || params.N > 3))
    throw std::invalid_argument("n > 2 or N > 3 is outside the supported range (use --override-caps)");
  if (name == "tau-closed-form" && params.n != 1) throw std::invalid_argument("tau-closed-form is for n = 1");
  if (name == "flat-trace" && params.n != 1) throw std::invalid_argument("flat-trace is for n = 1");

  int deg = params.deg.value_or(it->info.default_deg);
  // Tighter default degree for the n = 2 tau suites.
  if (!params.deg && params.n == 2 && name.rfind("tau-", 0) == 0) deg = 2;
  int cases = params.cases.value_or(it->info.default_cases);
  if (!params.cases && name == "tau-cocycle" && params.n == 2) cases = 20;
  if (deg < 0 || cases < 0) throw std::invalid_argument("--deg and --cases must be nonnegative");

  Context ctx{params, deg, cases, {}};
  const auto start = std::chrono::steady_clock::now();
  it->run(ctx);
  if (params.inject_failure) ctx.add("self-test: injected failure", EpsScalar(1), EpsScalar(0));
  const auto stop = std::chrono::steady_clock::now();

  SuiteReport r;
  r.suite = name;
  r.n = params.n;
  r.N = params.N;
  r.deg = deg;
  r.cases_requested = cases;
  r.seed = params.seed;
  r.cases = std::move(ctx.out);
  std::sort(r.cases.begin(), r.cases.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  for (const auto& c : r.cases) (c.pass ? r.passed : r.failed) += 1;
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

namespace {

nlohmann::json value_json(const CaseValue& v) {
  if (const auto* s = std::get_if<EpsScalar>(&v)) return scalar_to_json(*s);
  return std::get<std::string>(v);
}

std::string value_text(const CaseValue& v) {
  if (const auto* s = std::get_if<EpsScalar>(&v)) return s->to_string();
  return std::get<std::string>(v);
}

}  // namespace

nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"index", c.index},
                     {"input", c.input},
                     {"expected", value_json(c.expected)},
                     {"got", value_json(c.got)},
                     {"pass", c.pass}});
  return {{"suite", r.suite},
          {"parameters", {{"n", r.n}, {"N", r.N}, {"deg", r.deg}, {"cases", r.cases_requested}, {"seed", r.seed}}},
          {"cases", cases},
          {"summary", {{"total", r.cases.size()}, {"passed", r.passed}, {"failed", r.failed}}},
          {"wall_time_ms", r.wall_ms}};
}

std::string emit_report(const SuiteReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "suite " << r.suite << " (n=" << r.n << ", N=" << r.N << ", deg=" << r.deg << ", cases=" << r.cases_requested
      << ", seed=" << r.seed << ")\n";
  for (const auto& c : r.cases) {
    out << (c.pass ? "  pass " : "  FAIL ") << "[" << c.index << "] " << c.input << "\n";
    if (!c.pass) out << "       expected: " << value_text(c.expected) << "\n       got:      " << value_text(c.got) << "\n";
  }
  out << "summary: " << r.passed << " passed, " << r.failed << " failed, " << r.wall_ms << " ms\n";
  return out.str();
}

}  // namespace weylver
