#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/errors.hpp"
#include "tanaka/rational.hpp"

namespace tanaka {

// Sparse multivariate polynomial over Rational. Terms keyed by exponent
// vectors; zero coefficients are never stored.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;

  explicit Polynomial(int n_vars) : n_vars_(n_vars) {}

  static Polynomial constant(int n_vars, const Rational& c) {
    Polynomial p(n_vars);
    if (c != 0) p.terms_[Monomial(static_cast<std::size_t>(n_vars), 0)] = c;
    return p;
  }

  static Polynomial variable(int n_vars, int index) {
    Polynomial p(n_vars);
    Monomial m(static_cast<std::size_t>(n_vars), 0);
    m[static_cast<std::size_t>(index)] = 1;
    p.terms_[m] = 1;
    return p;
  }

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.n_vars_);
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial r(a.n_vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) {
    Polynomial r(a.n_vars_);
    if (c == 0) return r;
    for (const auto& [m, x] : a.terms_) r.terms_[m] = c * x;
    return r;
  }
  bool operator==(const Polynomial& o) const {
    return n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }

  Polynomial derivative(int var) const {
    Polynomial r(n_vars_);
    for (const auto& [m, c] : terms_) {
      const unsigned e = m[static_cast<std::size_t>(var)];
      if (e == 0) continue;
      Monomial d(m);
      d[static_cast<std::size_t>(var)] = e - 1;
      r.add_term(d, c * Rational(e));
    }
    return r;
  }

  Rational evaluate(const Vec& point) const {
    if (static_cast<int>(point.size()) != n_vars_)
      throw std::invalid_argument("evaluate: wrong point dimension");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
      total += t;
    }
    return total;
  }

  // Plain-text syntax: sum of signed terms; a term is '*'-separated factors;
  // a factor is a rational literal (p or p/q) or a variable with optional
  // '^' power, e.g. "x^2*y - 1/2*z + 3".
  static Polynomial parse(const std::string& text, const std::vector<std::string>& var_names);
  std::string to_text(const std::vector<std::string>& var_names) const;

 private:
  void check_vars(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_)
      throw ValidationError("DimensionMismatch", "polynomials over different variable sets");
  }
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int n_vars_;
  std::map<Monomial, Rational> terms_;
};

namespace detail {

struct PolyLexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("PolynomialSyntax", "expected a number in '" + std::string(s) + "'");
    return std::string(s.substr(start, pos - start));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start)
      throw ParseError("PolynomialSyntax", "expected a variable name in '" + std::string(s) + "'");
    return std::string(s.substr(start, pos - start));
  }
};

}  // namespace detail

inline Polynomial Polynomial::parse(const std::string& text,
                                    const std::vector<std::string>& var_names) {
  const int n = static_cast<int>(var_names.size());
  detail::PolyLexer lex{text};
  Polynomial result(n);
  bool first = true;
  while (!lex.eof()) {
    Rational sign = 1;
    if (lex.accept('+')) {
      sign = 1;
    } else if (lex.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("PolynomialSyntax", "expected '+' or '-' between terms in '" + text + "'");
    }
    first = false;
    // one term: factors joined by '*'
    Polynomial term = Polynomial::constant(n, sign);
    bool more = true;
    while (more) {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lex.number();
        std::string lit = num;
        if (lex.accept('/')) lit += "/" + lex.number();
        term = Polynomial::constant(n, parse_rational(lit)) * term;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::string name = lex.identifier();
        int idx = -1;
        for (int i = 0; i < n; ++i)
          if (var_names[static_cast<std::size_t>(i)] == name) {
            idx = i;
            break;
          }
        if (idx < 0) throw ParseError("PolynomialSyntax", "unknown variable '" + name + "'");
        unsigned power = 1;
        if (lex.accept('^')) power = static_cast<unsigned>(std::stoul(lex.number()));
        Polynomial v = Polynomial::variable(n, idx);
        for (unsigned e = 0; e < power; ++e) term = v * term;
      } else {
        throw ParseError("PolynomialSyntax", "unexpected character '" + std::string(1, c) +
                                                 "' in '" + text + "'");
      }
      more = lex.accept('*');
    }
    result += term;
  }
  return result;
}

inline std::string Polynomial::to_text(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += var_names[i];
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace tanaka
