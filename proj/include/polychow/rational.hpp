#ifndef POLYCHOW_RATIONAL_HPP
#define POLYCHOW_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polychow {

// Exact rational scalar. mpq_class keeps values canonical after every
// arithmetic operation; only the string/num-den constructors need an explicit
// canonicalize(), which make_rat and parse_rat take care of.
using Rat = mpq_class;
using Int = mpz_class;

// A point or vector in Q^k.
using Vec = std::vector<Rat>;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_integral(const Vec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto valid_int = [](std::string_view t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  return make_rat(n, d);
}

inline Vec to_vec(const std::vector<long>& xs) {
  Vec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Vec to_vec(const std::vector<int>& xs) {
  Vec v;
  v.reserve(xs.size());
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scales v to the primitive integer vector on the same ray. Zero stays zero.
inline Vec primitive(const Vec& v) {
  Int lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> ints(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * lcm;
    ints[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  Vec out(v.size());
  if (g == 0) return out;
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(Int(ints[i] / g));
  return out;
}

inline std::string to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace polychow

#endif  // POLYCHOW_RATIONAL_HPP
