#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "bpw/error.hpp"

namespace bpw {

/// Arbitrary precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw NormalizationError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& num) : q_(num) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw NormalizationError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading sign).
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty rational literal");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    if (slash == std::string::npos) {
      if (!valid_int(s, true)) throw DomainError("malformed rational '" + s + "'");
      if (s[0] == '+') s.erase(0, 1);
      return Rational(mpz_class(s));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n, true) || !valid_int(d, false))
      throw DomainError("malformed rational '" + s + "'");
    if (n[0] == '+') n.erase(0, 1);
    mpz_class dz(d);
    if (dz == 0) throw DomainError("zero denominator in '" + s + "'");
    return Rational(mpz_class(n), dz);
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Exact conversion; throws if not an integer or out of range.
  long to_long() const {
    if (!is_integer()) throw DomainError("rational " + str() + " is not an integer");
    if (!q_.get_num().fits_slong_p()) throw DomainError("integer out of range");
    return q_.get_num().get_si();
  }

  /// Serialized as "p/q", with "/q" omitted when q = 1.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw NormalizationError("division by zero rational");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const { return Rational(1) / *this; }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// Largest integer <= value.
  mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::string>{}(q_.get_num().get_str(16));
    return h * 1000003u ^ std::hash<std::string>{}(q_.get_den().get_str(16));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

/// r modulo the lattice step (step > 0), result in [0, step).
inline Rational mod_lattice(const Rational& r, const Rational& step) {
  Rational t = r / step;
  return (t - Rational(t.floor())) * step;
}

inline bool is_integer(const Rational& r) { return r.is_integer(); }

}  // namespace bpw
