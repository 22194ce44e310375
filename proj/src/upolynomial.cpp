#include "weylver/upolynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace weylver {

UPolynomial::UPolynomial(int k, const EpsScalar& constant) : k_(k) {
  add_term(Exponents(k, 0), constant);
}

UPolynomial UPolynomial::variable(int k, int i) {
  if (i < 0 || i >= k) throw std::out_of_range("UPolynomial variable index");
  UPolynomial out(k);
  Exponents e(k, 0);
  e[i] = 1;
  out.add_term(e, EpsScalar(1));
  return out;
}

UPolynomial UPolynomial::affine(int k, const EpsScalar& constant,
                                const std::vector<Rational>& linear) {
  UPolynomial out(k, constant);
  for (int i = 0; i < k && i < static_cast<int>(linear.size()); ++i) {
    Exponents e(k, 0);
    e[i] = 1;
    out.add_term(e, EpsScalar(linear[i]));
  }
  return out;
}

int UPolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

EpsScalar UPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? EpsScalar() : it->second;
}

void UPolynomial::add_term(const Exponents& e, const EpsScalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != k_) throw std::invalid_argument("UPolynomial arity mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UPolynomial UPolynomial::truncated(int d) const {
  UPolynomial out(k_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) <= d) out.terms_.emplace(e, c);
  return out;
}

EpsScalar UPolynomial::evaluate(const std::vector<EpsScalar>& point) const {
  if (static_cast<int>(point.size()) != k_) throw std::invalid_argument("evaluation point arity");
  EpsScalar out;
  for (const auto& [e, c] : terms_) {
    EpsScalar term = c;
    for (int i = 0; i < k_; ++i) term *= pow(point[i], e[i]);
    out += term;
  }
  return out;
}

UPolynomial& UPolynomial::operator+=(const UPolynomial& other) {
  if (other.k_ != k_) throw std::invalid_argument("UPolynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

UPolynomial& UPolynomial::operator-=(const UPolynomial& other) {
  if (other.k_ != k_) throw std::invalid_argument("UPolynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

UPolynomial& UPolynomial::operator*=(const EpsScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("UPolynomial arity mismatch");
  UPolynomial out(a.k_);
  Exponents e(a.k_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.k_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

UPolynomial pow(const UPolynomial& p, int e) {
  UPolynomial out(p.num_vars(), EpsScalar(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

std::string UPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")";
    for (int i = 0; i < k_; ++i) {
      if (e[i] == 0) continue;
      out += "*" + (i < static_cast<int>(names.size()) ? names[i] : "u" + std::to_string(i + 1));
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

}  // namespace weylver
