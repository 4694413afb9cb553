#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bpw/exact/rational.hpp"
#include "bpw/exact/variables.hpp"

namespace bpw {

/// Exponent vector indexed by registry variable id; trailing zeros trimmed.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

inline unsigned exponent_of(const Exponents& e, unsigned var) { return var < e.size() ? e[var] : 0u; }

inline void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

/// Graded lexicographic order, variable 0 most significant. Used as a
/// "greater" comparator so the leading term sorts first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      unsigned ea = exponent_of(a, static_cast<unsigned>(i)), eb = exponent_of(b, static_cast<unsigned>(i));
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

/// Multivariate polynomial over Q in registry variables.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static Polynomial variable(unsigned id, unsigned power = 1) {
    Polynomial p;
    Exponents e(id + 1, 0);
    e[id] = power;
    trim(e);
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }
  static Polynomial variable(std::string_view name) { return variable(var_index(name)); }

  static Polynomial monomial(Exponents e, const Rational& c) {
    Polynomial p;
    trim(e);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational constant_value() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  const Exponents& leading_exponents() const { return terms_.begin()->first; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, bpw::total_degree(e));
    return d;
  }
  unsigned degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_of(e, var));
    return d;
  }
  std::set<unsigned> variables() const {
    std::set<unsigned> vs;
    for (const auto& [e, c] : terms_)
      for (unsigned i = 0; i < e.size(); ++i)
        if (e[i] != 0) vs.insert(i);
    return vs;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(mul_exp(ea, eb), ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Leading coefficient scaled to 1 (zero stays zero).
  Polynomial monic() const { return is_zero() ? *this : scaled(leading_coefficient().inverse()); }

  /// Exact quotient; throws DomainError when divisor does not divide *this.
  Polynomial divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw NormalizationError("polynomial division by zero");
    if (divisor.is_constant()) return scaled(divisor.constant_value().inverse());
    Polynomial rem = *this, quot;
    const Exponents& lt = divisor.leading_exponents();
    const Rational& lc = divisor.leading_coefficient();
    while (!rem.is_zero()) {
      const Exponents& e = rem.leading_exponents();
      Exponents q;
      if (!divides(lt, e, q)) throw DomainError("inexact polynomial division");
      Polynomial t = monomial(q, rem.leading_coefficient() / lc);
      quot += t;
      rem -= t * divisor;
    }
    return quot;
  }

  bool divisible_by(const Polynomial& divisor) const {
    try {
      (void)divide_exact(divisor);
      return true;
    } catch (const DomainError&) {
      return false;
    }
  }

  /// Coefficients with respect to one variable: degree -> coefficient polynomial.
  std::map<unsigned, Polynomial> coefficients_in(unsigned var) const {
    std::map<unsigned, Polynomial> out;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      unsigned d = 0;
      if (var < rest.size()) {
        d = rest[var];
        rest[var] = 0;
        trim(rest);
      }
      out[d].add_term(rest, c);
    }
    return out;
  }

  /// Replace variable `var` by polynomial `value`.
  Polynomial substitute(unsigned var, const Polynomial& value) const {
    Polynomial r;
    std::map<unsigned, Polynomial> powers;
    for (const auto& [d, coeff] : coefficients_in(var)) {
      auto it = powers.find(d);
      if (it == powers.end()) it = powers.emplace(d, value.pow(d)).first;
      r += coeff * it->second;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Canonical text, leading term first, e.g. "-3*x^2 + 2*k*x + 4".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = c.abs();
      bool negative = c.sign() < 0;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string mono = monomial_str(e);
      if (mono.empty())
        out += a.str();
      else if (a.is_one())
        out += mono;
      else
        out += a.str() + "*" + mono;
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [e, c] : terms_) {
      for (unsigned v : e) h = h * 31 + v;
      h = h * 1000003u ^ c.hash();
    }
    return h;
  }

 private:
  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static Exponents mul_exp(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
  }

  static bool divides(const Exponents& d, const Exponents& e, Exponents& quotient) {
    if (d.size() > e.size()) {
      for (std::size_t i = e.size(); i < d.size(); ++i)
        if (d[i] != 0) return false;
    }
    quotient.assign(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      unsigned di = i < d.size() ? d[i] : 0;
      if (di > e[i]) return false;
      quotient[i] = e[i] - di;
    }
    trim(quotient);
    return true;
  }

  static std::string monomial_str(const Exponents& e) {
    std::string out;
    for (unsigned i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += var_name(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  friend Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

  Terms terms_;
};

namespace detail {

inline Polynomial from_coefficients(const std::map<unsigned, Polynomial>& coeffs, unsigned var) {
  Polynomial r;
  for (const auto& [d, c] : coeffs) r += c * Polynomial::variable(var, d);
  return r;
}

/// Pseudo-remainder of a by b as univariate polynomials in `var`.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, unsigned var) {
  auto bc = b.coefficients_in(var);
  unsigned db = bc.rbegin()->first;
  Polynomial lb = bc.rbegin()->second;
  Polynomial r = a;
  unsigned da = r.degree_in(var);
  if (da < db) return r;
  unsigned steps = da - db + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    auto rc = r.coefficients_in(var);
    unsigned dr = rc.rbegin()->first;
    Polynomial lr = rc.rbegin()->second;
    r = r * lb - lr * Polynomial::variable(var, dr - db) * b;
    --steps;
  }
  return r * lb.pow(steps);
}

}  // namespace detail

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

inline Polynomial content_in(const Polynomial& p, unsigned var) {
  Polynomial g;
  for (const auto& [d, c] : p.coefficients_in(var)) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Polynomial(1);
  }
  return g;
}

}  // namespace detail

namespace detail {

/// Euclid over Q for polynomials in a single variable.
inline Polynomial univariate_gcd(Polynomial a, Polynomial b, unsigned var) {
  while (!b.is_zero()) {
    auto bc = b.coefficients_in(var);
    unsigned db = bc.rbegin()->first;
    Rational lb = bc.rbegin()->second.constant_value();
    while (!a.is_zero() && a.degree_in(var) >= db) {
      auto ac = a.coefficients_in(var);
      unsigned da = ac.rbegin()->first;
      Rational la = ac.rbegin()->second.constant_value();
      a -= b.scaled(la / lb) * Polynomial::variable(var, da - db);
    }
    std::swap(a, b);
  }
  return a.monic();
}

/// Proves gcd(a, b) = 1 by specializing all but one variable at points where
/// both leading coefficients survive. Returns false when inconclusive.
inline bool probably_coprime_proven(const Polynomial& a, const Polynomial& b) {
  auto va = a.variables(), vb = b.variables();
  std::set<unsigned> common;
  for (unsigned v : va)
    if (vb.count(v)) common.insert(v);
  if (common.empty()) return true;
  std::set<unsigned> all = va;
  all.insert(vb.begin(), vb.end());
  for (unsigned main : common) {
    bool settled = false;
    for (long attempt = 0; attempt < 4 && !settled; ++attempt) {
      Polynomial sa = a, sb = b;
      long value = 3 + 7 * attempt;
      for (unsigned v : all) {
        if (v == main) continue;
        Polynomial point{Rational(value)};
        sa = sa.substitute(v, point);
        sb = sb.substitute(v, point);
        value = value * 5 + 2 + static_cast<long>(v);
        value %= 1009;
      }
      if (sa.degree_in(main) != a.degree_in(main) || sb.degree_in(main) != b.degree_in(main)) continue;
      settled = true;
      if (univariate_gcd(sa, sb, main).degree_in(main) != 0) return false;
    }
    if (!settled) return false;
  }
  return true;
}

}  // namespace detail

/// Monic greatest common divisor (gcd(0,0) = 0).
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  auto va = a.variables(), vb = b.variables();
  std::set<unsigned> all = va;
  all.insert(vb.begin(), vb.end());
  if (all.size() == 1) return detail::univariate_gcd(a, b, *all.begin());
  if (detail::probably_coprime_proven(a, b)) return Polynomial(1);
  unsigned var = *all.begin();
  if (!va.count(var)) return poly_gcd(a, detail::content_in(b, var));
  if (!vb.count(var)) return poly_gcd(detail::content_in(a, var), b);
  Polynomial ca = detail::content_in(a, var), cb = detail::content_in(b, var);
  Polynomial c = poly_gcd(ca, cb);
  Polynomial p = a.divide_exact(ca), q = b.divide_exact(cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  // Subresultant pseudo-remainder sequence.
  Polynomial sg(1), sh(1);
  while (!q.is_zero()) {
    unsigned delta = p.degree_in(var) - q.degree_in(var);
    Polynomial r = detail::pseudo_remainder(p, q, var);
    p = std::move(q);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      p = Polynomial(1);
      break;
    }
    q = r.divide_exact(sg * sh.pow(delta));
    sg = p.coefficients_in(var).rbegin()->second;
    if (delta > 0) sh = sg.pow(delta).divide_exact(sh.pow(delta - 1));
  }
  Polynomial g = p.degree_in(var) == 0 ? Polynomial(1) : p.divide_exact(detail::content_in(p, var));
  return (c * g).monic();
}

inline bool poly_equal(const Polynomial& p, const Polynomial& q) { return (p - q).is_zero(); }

}  // namespace bpw
