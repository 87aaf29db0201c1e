#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tanaka {

// Exact rational scalar. mpq_rational keeps values canonical: lowest terms,
// positive denominator. Nothing in this library ever rounds.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos)
    throw std::invalid_argument("empty rational literal");
  std::string s(text.substr(first, last - first + 1));
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline void axpy(Vec& y, const Rational& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

inline Vec scaled(const Vec& x, const Rational& a) {
  Vec y(x);
  for (auto& e : y) e *= a;
  return y;
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec e = zero_vec(n);
  e.at(i) = 1;
  return e;
}

}  // namespace tanaka
