#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bpw/classify/curves.hpp"

namespace bpw {

struct OrbitEntry {
  long n = 0;
  Weight weight;
  /// Top dimension applied when flowing out of this entry (nullopt if not integral).
  std::optional<long> top_dim;
  bool multi_witness = false;
};

/// One row of an orbit table: closed form next to the recursively generated weight.
struct OrbitStep {
  OrbitEntry closed;
  Weight recursive;
  std::optional<long> witness_top_dim;  // min witness of the closed-form weight
  bool matches = false;
};

namespace detail {

inline std::optional<long> as_long(const Scalar& s) {
  if (!s.is_rational() || !s.rational().is_integer()) return std::nullopt;
  return s.rational().to_long();
}

/// Top dimension along the vacuum orbit: 1 on even m >= 0 and odd m < 0, k+2 otherwise.
inline Scalar vacuum_dim_rule(const Level& level, long m) {
  bool even = m % 2 == 0;
  bool one = m >= 0 ? even : !even;
  return one ? Scalar(1) : level.k() + Scalar(2);
}

inline long floor_half(long m) { return m >= 0 ? m / 2 : -((-m + 1) / 2); }

}  // namespace detail

inline Weight vacuum_orbit_weight(const Level& level, long m) {
  const Scalar& k = level.k();
  Scalar k3 = k + Scalar(3), three(3);
  if (m >= 0) {
    Scalar n(m / 2);
    if (m % 2 == 0) return {-n * k3 / three, n * (three + Scalar(2) * k + k3 * n) / three};
    return {-n - Scalar(1) - (n + Scalar(2)) * k / three, (n + Scalar(1)) * (n * k3 + Scalar(2) * k + three) / three};
  }
  if (m % 2 == 0) {
    Scalar n(m / 2);
    return {-n * k3 / three, -n * (k - k3 * n) / three};
  }
  Scalar n((m + 1) / 2);  // m = 2n - 1
  return {Scalar(1) - n - (n - Scalar(2)) * k / three,
          -n * (Scalar(2) * k + three - n * k3) / three};
}

inline OrbitEntry vacuum_orbit(const Level& level, long m) {
  if ((level.k() + Scalar(3)).is_zero()) throw SingularLevelError("level k = -3 is singular");
  OrbitEntry e{m, vacuum_orbit_weight(level, m), detail::as_long(detail::vacuum_dim_rule(level, m)), m == 0};
  return e;
}

/// Entries -reach..reach, the recursive weights generated outward from the vacuum.
inline std::vector<OrbitStep> vacuum_orbit_table(const Level& level, long reach) {
  std::vector<OrbitStep> rows;
  auto row = [&](long m, const Weight& rec) {
    OrbitStep s{vacuum_orbit(level, m), rec, std::nullopt, false};
    if (level.positive_integer_regime()) s.witness_top_dim = top_dim(level, s.closed.weight).dim;
    s.matches = s.closed.weight == rec;
    return s;
  };
  std::vector<OrbitStep> negative;
  Weight w{Scalar(0), Scalar(0)};
  for (long m = -1; m >= -reach; --m) {
    w = sflow_weight_inverse(level, w, detail::vacuum_dim_rule(level, m));
    negative.push_back(row(m, w));
  }
  rows.assign(negative.rbegin(), negative.rend());
  w = Weight{Scalar(0), Scalar(0)};
  rows.push_back(row(0, w));
  for (long m = 1; m <= reach; ++m) {
    w = sflow_weight(level, w, detail::vacuum_dim_rule(level, m - 1));
    rows.push_back(row(m, w));
  }
  return rows;
}

inline Weight special_point(const Level& level, CurveIndex i) {
  Scalar k3 = level.k_plus_3();
  if (level.positive_integer_regime() && i.value() > level.curve_count())
    throw DomainError("special point index exceeds k+2");
  Scalar ii(i.value());
  return {(Scalar(1) - ii) / Scalar(3), (ii - Scalar(1)) * (ii - Scalar(1) - level.k()) / (Scalar(3) * k3)};
}

/// Closed form (x^i_m, y^i_m) of the orbit through the i-th special point.
inline Weight special_orbit_weight(const Level& level, CurveIndex i, long m) {
  if (m < 0) throw DomainError("special orbits are indexed by m >= 0");
  const Scalar& k = level.k();
  Scalar ii(i.value()), n(m / 2), three(3);
  Scalar den = three * level.k_plus_3();
  Scalar k2 = k * k, n2 = n * n;
  if (m % 2 == 0) {
    Scalar x = (Scalar(1) - ii) / three - n * (k + three) / three;
    Scalar y = (Scalar(1) - Scalar(2) * ii + ii * ii + k - ii * k + Scalar(12) * n - three * ii * n +
                Scalar(10) * k * n - ii * k * n + Scalar(2) * k2 * n + Scalar(9) * n2 + Scalar(6) * k * n2 +
                k2 * n2) /
               den;
    return {x, y};
  }
  Scalar x = (Scalar(-5) + Scalar(2) * ii - three * n - k * (Scalar(2) + n)) / three;
  Scalar y = (Scalar(16) - Scalar(8) * ii + ii * ii + Scalar(12) * k - three * ii * k + Scalar(2) * k2 +
              Scalar(21) * n - three * ii * n + Scalar(16) * k * n - ii * k * n + three * k2 * n + Scalar(9) * n2 +
              Scalar(6) * k * n2 + k2 * n2) /
             den;
  return {x, y};
}

/// Top dimension i on even steps and k+3-i on odd steps.
inline Scalar special_dim_rule(const Level& level, CurveIndex i, long m) {
  return m % 2 == 0 ? Scalar(i.value()) : level.k() + Scalar(3) - Scalar(i.value());
}

inline OrbitEntry orbit_from_special(const Level& level, CurveIndex i, long m) {
  if (!level.positive_integer_regime()) throw DomainError("special orbits need k+2 in Z>=1");
  if (i.value() > level.curve_count()) throw DomainError("special point index exceeds k+2");
  auto dim = detail::as_long(special_dim_rule(level, i, m));
  return {m, special_orbit_weight(level, i, m), dim, false};
}

inline std::vector<OrbitStep> special_orbit_table(const Level& level, CurveIndex i, long steps) {
  std::vector<OrbitStep> rows;
  Weight w = special_point(level, i);
  for (long m = 0; m <= steps; ++m) {
    if (m > 0) w = sflow_weight(level, w, special_dim_rule(level, i, m - 1));
    OrbitStep s{orbit_from_special(level, i, m), w, std::nullopt, false};
    auto td = top_dim(level, s.closed.weight);
    s.witness_top_dim = td.dim;
    s.closed.multi_witness = td.multi_witness;
    s.matches = s.closed.weight == w;
    rows.push_back(std::move(s));
  }
  return rows;
}

/// h_j(x^i_m, y^i_m) minus its stated factorization, with j a free variable.
inline Scalar special_factorization_defect(const Level& level, CurveIndex i, long m) {
  Scalar j = Scalar::variable("j");
  Scalar ii(i.value()), n(m / 2), three(3);
  const Scalar& k = level.k();
  Scalar lhs = eval_h(j, level, special_orbit_weight(level, i, m));
  Scalar rhs = m % 2 == 0
                   ? (ii - j) * (Scalar(-2) + j - three * n - k * (Scalar(1) + n))
                   : -(Scalar(-3) + ii + j - k) * (Scalar(-5) + ii + j - Scalar(2) * k - three * n - k * n);
  return lhs - rhs;
}

inline std::string join_longs(const std::vector<long>& v, char sep = ';') {
  std::string s;
  for (std::size_t a = 0; a < v.size(); ++a) s += (a ? std::string(1, sep) : "") + std::to_string(v[a]);
  return s;
}

/// CSV header: k,index,x,y,witnesses,top_dim
inline std::string orbit_csv(const Level& level, const std::vector<OrbitStep>& rows) {
  std::ostringstream out;
  out << "k,n,x,y,witnesses,top_dim\n";
  for (const auto& r : rows) {
    std::string wit = level.positive_integer_regime() ? join_longs(witnesses_in_Sk(level, r.closed.weight)) : "";
    out << level.k().str() << ',' << r.closed.n << ',' << r.closed.weight.x.str() << ',' << r.closed.weight.y.str()
        << ',' << wit << ',' << (r.closed.top_dim ? std::to_string(*r.closed.top_dim) : "unknown") << '\n';
  }
  return out.str();
}

}  // namespace bpw
