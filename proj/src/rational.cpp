#include "weylver/rational.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace weylver {

Rational factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Integer b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return Rational(b);
}

Rational bernoulli(int m) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= m) {
    const int next = static_cast<int>(table.size());
    Rational sum = 0;
    for (int k = 0; k < next; ++k) sum += binomial(next + 1, k) * table[k];
    table.push_back(-sum / (next + 1));
  }
  return table[m];
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

int permutation_sign(const std::vector<int>& image) {
  int sign = 1;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) sign = -sign;
  return sign;
}

std::vector<int> inverse_permutation(const std::vector<int>& image) {
  std::vector<int> inv(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) inv[image[i]] = static_cast<int>(i);
  return inv;
}

std::vector<SignedPermutation> all_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    out.push_back({p, permutation_sign(p)});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace weylver
