#include "weylver/eps_scalar.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace weylver {

EpsScalar::EpsScalar(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

EpsScalar EpsScalar::monomial(int exponent, const Rational& c) {
  EpsScalar out;
  if (c != 0) out.terms_.emplace_back(exponent, c);
  return out;
}

Rational EpsScalar::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rational(0);
}

int EpsScalar::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero EpsScalar");
  return terms_.front().first;
}

int EpsScalar::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero EpsScalar");
  return terms_.back().first;
}

EpsScalar EpsScalar::shifted(int k) const {
  EpsScalar out = *this;
  for (auto& t : out.terms_) t.first += k;
  return out;
}

namespace {

// Merge of two sorted term lists; sign selects addition or subtraction.
std::vector<EpsScalar::Term> merge(const std::vector<EpsScalar::Term>& a,
                                   const std::vector<EpsScalar::Term>& b, bool subtract) {
  std::vector<EpsScalar::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = subtract ? i->second - j->second : i->second + j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

EpsScalar& EpsScalar::operator+=(const EpsScalar& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

EpsScalar& EpsScalar::operator-=(const EpsScalar& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
  EpsScalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    out.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first,
                            a.terms_[0].second * b.terms_[0].second);
    return out;
  }
  std::map<int, Rational> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.emplace_back(e, std::move(c));
  return out;
}

EpsScalar& EpsScalar::operator*=(const EpsScalar& other) { return *this = *this * other; }

EpsScalar& EpsScalar::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

EpsScalar& EpsScalar::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("EpsScalar division by zero");
  for (auto& t : terms_) t.second /= c;
  return *this;
}

EpsScalar EpsScalar::operator-() const {
  EpsScalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

bool operator<(const EpsScalar& a, const EpsScalar& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                      b.terms_.end());
}

std::string EpsScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += weylver::to_string(mag);
      continue;
    }
    if (mag != 1) out += weylver::to_string(mag) + "*";
    out += "e";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

EpsScalar pow(const EpsScalar& x, int k) {
  if (k < 0) throw std::domain_error("negative power of EpsScalar");
  EpsScalar out(1);
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

std::ostream& operator<<(std::ostream& os, const EpsScalar& x) { return os << x.to_string(); }

}  // namespace weylver
