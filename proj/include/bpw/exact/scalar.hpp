#pragma once

#include <map>
#include <memory>
#include <string>

#include "bpw/exact/polynomial.hpp"

namespace bpw {

/// Exact element of Q(k, k', lam, x, y, ...): a rational number, or a reduced
/// ratio of polynomials whose denominator has leading coefficient 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& r) : r_(r) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : r_(v) {}             // NOLINT(google-explicit-constructor)
  Scalar(int v) : r_(v) {}              // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) : r_(num, den) {}
  Scalar(const Polynomial& p) { *this = fraction(p, Polynomial(1)); }  // NOLINT(google-explicit-constructor)

  static Scalar variable(std::string_view name) { return Scalar(Polynomial::variable(name)); }
  static Scalar variable(unsigned id) { return Scalar(Polynomial::variable(id)); }

  /// num/den reduced to canonical form.
  static Scalar fraction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw NormalizationError("rational function with zero denominator");
    if (num.is_zero()) return Scalar();
    if (den.is_constant()) {
      num = num.scaled(den.constant_value().inverse());
      den = Polynomial(1);
    } else {
      Polynomial g = poly_gcd(num, den);
      if (!g.is_constant()) {
        num = num.divide_exact(g);
        den = den.divide_exact(g);
      }
      Rational lc = den.leading_coefficient();
      if (!lc.is_one()) {
        num = num.scaled(lc.inverse());
        den = den.scaled(lc.inverse());
      }
    }
    if (num.is_constant() && den.is_constant()) return Scalar(num.constant_value());
    Scalar s;
    s.f_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
    return s;
  }

  bool is_rational() const { return !f_; }

 private:
  /// (n1/d1) * (n2/d2) for reduced inputs: cancel gcd(n1, d2) and gcd(n2, d1).
  static Scalar cross_product(Polynomial n1, Polynomial d1, Polynomial n2, Polynomial d2) {
    Polynomial g1 = poly_gcd(n1, d2), g2 = poly_gcd(n2, d1);
    if (!g1.is_constant()) {
      n1 = n1.divide_exact(g1);
      d2 = d2.divide_exact(g1);
    }
    if (!g2.is_constant()) {
      n2 = n2.divide_exact(g2);
      d1 = d1.divide_exact(g2);
    }
    return finish(n1 * n2, d1 * d2);
  }

  /// num / (den * g) where only factors of g can cancel against num.
  static Scalar reduced_fraction(Polynomial num, Polynomial den, Polynomial g) {
    if (num.is_zero()) return Scalar();
    Polynomial c = poly_gcd(num, g);
    if (!c.is_constant()) {
      num = num.divide_exact(c);
      g = g.divide_exact(c);
    }
    return finish(std::move(num), den * g);
  }

  /// Normalize the leading coefficient of an already reduced fraction.
  static Scalar finish(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw NormalizationError("rational function with zero denominator");
    if (num.is_zero()) return Scalar();
    Rational lc = den.leading_coefficient();
    if (!lc.is_one()) {
      num = num.scaled(lc.inverse());
      den = den.scaled(lc.inverse());
    }
    if (num.is_constant() && den.is_constant()) return Scalar(num.constant_value());
    Scalar s;
    s.f_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
    return s;
  }

 public:
  const Rational& rational() const {
    if (f_) throw DomainError("scalar " + str() + " is not a rational number");
    return r_;
  }
  bool is_zero() const { return !f_ && r_.is_zero(); }
  bool is_one() const { return !f_ && r_.is_one(); }
  bool is_polynomial() const { return !f_ || f_->den.is_constant(); }

  Polynomial numerator() const { return f_ ? f_->num : Polynomial(r_); }
  Polynomial denominator() const { return f_ ? f_->den : Polynomial(1); }

  Scalar operator-() const {
    if (!f_) return Scalar(-r_);
    Scalar s;
    s.f_ = std::make_shared<const Frac>(Frac{-f_->num, f_->den});
    return s;
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!a.f_ && !b.f_) return Scalar(a.r_ + b.r_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Both operands are reduced, so only gcd(num, gcd(da, db)) can cancel.
    Polynomial da = a.denominator(), db = b.denominator();
    if (da == db) return fraction(a.numerator() + b.numerator(), da);
    Polynomial g = poly_gcd(da, db);
    Polynomial da1 = da.divide_exact(g), db1 = db.divide_exact(g);
    Polynomial num = a.numerator() * db1 + b.numerator() * da1;
    return reduced_fraction(num, da1 * db1, g);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!a.f_ && !b.f_) return Scalar(a.r_ * b.r_);
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (!a.f_) return b.scaled(a.r_);
    if (!b.f_) return a.scaled(b.r_);
    return cross_product(a.numerator(), a.denominator(), b.numerator(), b.denominator());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw NormalizationError("division by zero scalar");
    if (!a.f_ && !b.f_) return Scalar(a.r_ / b.r_);
    return cross_product(a.numerator(), a.denominator(), b.denominator(), b.numerator());
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const { return Scalar(1) / *this; }
  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  Scalar scaled(const Rational& s) const {
    if (!f_) return Scalar(r_ * s);
    if (s.is_zero()) return Scalar();
    Scalar out;
    out.f_ = std::make_shared<const Frac>(Frac{f_->num.scaled(s), f_->den});
    return out;
  }

  /// Substitute values for variables and renormalize.
  Scalar substitute(const std::map<unsigned, Scalar>& values) const {
    if (!f_) return *this;
    return evaluate_poly(f_->num, values) / evaluate_poly(f_->den, values);
  }
  Scalar substitute(unsigned var, const Scalar& value) const { return substitute(std::map<unsigned, Scalar>{{var, value}}); }

  static Scalar evaluate_poly(const Polynomial& p, const std::map<unsigned, Scalar>& values) {
    Scalar total;
    for (const auto& [e, c] : p.terms()) {
      Scalar term(c);
      Exponents rest;
      for (unsigned i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = values.find(i);
        if (it != values.end()) {
          term *= it->second.pow(e[i]);
        } else {
          if (rest.size() <= i) rest.resize(i + 1, 0);
          rest[i] = e[i];
        }
      }
      if (!rest.empty()) term *= Scalar(Polynomial::monomial(rest, Rational(1)));
      total += term;
    }
    return total;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.f_ && !b.f_) return a.r_ == b.r_;
    if (!a.f_ || !b.f_) return false;
    return a.f_->num == b.f_->num && a.f_->den == b.f_->den;
  }

  /// "p/q" for rationals; canonical polynomial text, or "(num)/(den)".
  std::string str() const {
    if (!f_) return r_.str();
    if (f_->den.is_constant()) return f_->num.str();
    return "(" + f_->num.str() + ")/(" + f_->den.str() + ")";
  }

  std::size_t hash() const { return f_ ? f_->num.hash() * 31 + f_->den.hash() : r_.hash(); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  struct Frac {
    Polynomial num;
    Polynomial den;
  };
  Rational r_;
  std::shared_ptr<const Frac> f_;
};

/// Generalized binomial t(t-1)...(t-j+1)/j!.
inline Scalar binom_general(const Scalar& t, unsigned j) {
  Scalar r(1);
  for (unsigned i = 0; i < j; ++i) r *= (t - Scalar(static_cast<long>(i))) / Scalar(static_cast<long>(i + 1));
  return r;
}

inline Rational binom_rational(const Rational& t, unsigned j) {
  Rational r(1);
  for (unsigned i = 0; i < j; ++i) r *= (t - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
  return r;
}

/// Binomial with integer upper argument (any sign).
inline Rational binom_int(long m, long j) {
  if (j < 0) return Rational(0);
  return binom_rational(Rational(m), static_cast<unsigned>(j));
}

/// Full substitution; every variable of p must be assigned.
inline Scalar poly_eval(const Polynomial& p, const std::map<unsigned, Scalar>& assignment) {
  for (unsigned v : p.variables())
    if (!assignment.count(v)) throw DomainError("parameter '" + var_name(v) + "' is not assigned");
  return Scalar::evaluate_poly(p, assignment);
}

}  // namespace bpw
