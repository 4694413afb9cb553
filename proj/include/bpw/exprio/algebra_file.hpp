#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bpw/exprio/expr.hpp"
#include "bpw/ffield/engine.hpp"

namespace bpw {

// Algebra spec files:
//
//   algebra: osp-F
//   [factor osp]
//   kind: affine            ; affine | heisenberg | clifford-neutral | clifford-charged | lattice | bp
//   level: kp               ; "$level" takes the level supplied by the caller
//   gen: x odd 1
//   [h,x] = x               ; a_(0)b for a pair that is not odd-odd
//   {x,y} = h               ; a_(0)b for two odd generators
//   (x,y) = 2               ; invariant form; a_(1)b = level * form for affine and heisenberg kinds
//
// Reverse entries are filled by super skew-symmetry unless given explicitly.

namespace detail {

inline std::string trim_copy(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

struct SpecLine {
  std::size_t number;
  std::size_t indent;
  std::string text;
};

struct RawEntry {
  char open;  // '[', '{' or '('
  std::string a, b;
  std::string rhs;
  SpecLine line;
};

struct RawFactor {
  std::string name;
  std::optional<FactorKind> kind;
  std::optional<Scalar> level;
  std::vector<GeneratorInfo> gens;
  std::vector<RawEntry> entries;
  SpecLine header;
};

[[noreturn]] inline void spec_fail(const SpecLine& l, const std::string& msg, std::size_t col = 0,
                                   std::vector<std::string> expected = {}) {
  throw ParseError(msg, l.number, l.indent + col + 1, std::move(expected));
}

inline FactorKind parse_kind(const SpecLine& l, const std::string& v) {
  if (v == "affine") return FactorKind::AffineSuper;
  if (v == "heisenberg") return FactorKind::Heisenberg;
  if (v == "clifford-neutral") return FactorKind::CliffordNeutral;
  if (v == "clifford-charged") return FactorKind::CliffordCharged;
  if (v == "lattice") return FactorKind::Lattice;
  if (v == "bp") return FactorKind::BPAbstract;
  spec_fail(l, "unknown factor kind '" + v + "'", 0,
            {"affine", "heisenberg", "clifford-neutral", "clifford-charged", "lattice", "bp"});
}

inline Scalar parse_coefficient(const SpecLine& l, const std::string& tok) {
  std::string t = tok;
  Scalar sign(1);
  if (t.rfind("-{", 0) == 0) {
    sign = Scalar(-1);
    t = t.substr(1);
  }
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  try {
    return sign * parse_scalar(t);
  } catch (const Error&) {
    spec_fail(l, "malformed coefficient '" + tok + "'", 0, {"number", "{scalar}"});
  }
}

/// "2 e - h + 1", "-x", "2*e": generator names may end in + or -, so signs
/// between terms must be separated by spaces.
inline OpeValue parse_lincomb(const SpecLine& l, const std::string& rhs, const Factor& f) {
  std::vector<std::string> toks;
  std::istringstream in(rhs);
  for (std::string t; in >> t;) {
    std::size_t star;
    while ((star = t.find('*')) != std::string::npos && t.front() != '{') {
      if (star > 0) toks.push_back(t.substr(0, star));
      t = t.substr(star + 1);
    }
    if (!t.empty()) toks.push_back(t);
  }
  if (toks.empty()) spec_fail(l, "empty right-hand side", 0, {"linear combination"});
  OpeValue out;
  std::size_t i = 0;
  Scalar sign(1);
  bool need_term = true;
  while (i < toks.size()) {
    std::string t = toks[i];
    if (t == "+" || t == "-") {
      if (!need_term) {
        sign = t == "-" ? Scalar(-1) : Scalar(1);
        need_term = true;
        ++i;
        continue;
      }
      spec_fail(l, "dangling sign in '" + rhs + "'", 0, {"term"});
    }
    if (!need_term) spec_fail(l, "missing + or - before '" + t + "'", 0, {"+", "-"});
    Scalar c = sign;
    if (t.size() > 1 && t[0] == '-' && !std::isdigit(static_cast<unsigned char>(t[1])) && t[1] != '{') {
      c = -c;
      t = t.substr(1);
    }
    bool numeric = std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '{' ||
                   (t[0] == '-' && t.size() > 1);
    bool has_gen = !numeric;
    if (numeric) {
      c = c * parse_coefficient(l, t);
      if (i + 1 < toks.size() && toks[i + 1] != "+" && toks[i + 1] != "-") {
        ++i;
        t = toks[i];
        has_gen = true;
      }
    }
    if (has_gen) {
      int g = -1;
      for (std::size_t k = 0; k < f.gens.size(); ++k)
        if (f.gens[k].name == t) g = static_cast<int>(k);
      if (g < 0) spec_fail(l, "undeclared generator '" + t + "' in factor '" + f.name + "'", 0, {"generator"});
      Scalar prev = out.gens.count(g) ? out.gens[g] : Scalar(0);
      out.gens[g] = prev + c;
      if (out.gens[g].is_zero()) out.gens.erase(g);
    } else {
      out.vac += c;
    }
    need_term = false;
    sign = Scalar(1);
    ++i;
  }
  if (need_term) spec_fail(l, "dangling sign in '" + rhs + "'", 0, {"term"});
  return out;
}

inline Factor build_factor(const RawFactor& r, const ResourceGuards& guards) {
  if (!r.kind) spec_fail(r.header, "factor '" + r.name + "' has no kind", 0, {"kind:"});
  FactorKind kind = *r.kind;
  auto level = [&]() {
    if (!r.level) spec_fail(r.header, "factor '" + r.name + "' needs a level", 0, {"level:"});
    return *r.level;
  };
  if (kind == FactorKind::Lattice) {
    Scalar n = level();
    if (!n.is_rational() || !n.rational().is_integer())
      spec_fail(r.header, "lattice pairing of '" + r.name + "' must be an integer");
    if (!r.gens.empty() || !r.entries.empty())
      spec_fail(r.header, "lattice factor '" + r.name + "' has the fixed generator phi");
    return lattice_factor(r.name, n.rational().to_long());
  }
  if (kind == FactorKind::BPAbstract) {
    if (!r.gens.empty() || !r.entries.empty())
      spec_fail(r.header, "bp factor '" + r.name + "' has the fixed generators J, T, G+, G-");
    return bp_factor(Level(level()), r.name, guards);
  }
  Factor f{r.name, kind, r.level.value_or(Scalar(0)), r.gens, {}, nullptr};
  bool scaled = kind == FactorKind::AffineSuper || kind == FactorKind::Heisenberg;
  if (scaled) level();
  std::set<std::tuple<int, int, int>> explicit_keys;
  std::vector<std::tuple<int, int, int, OpeValue>> entries;
  for (const RawEntry& e : r.entries) {
    int a = -1, b = -1;
    for (std::size_t k = 0; k < f.gens.size(); ++k) {
      if (f.gens[k].name == e.a) a = static_cast<int>(k);
      if (f.gens[k].name == e.b) b = static_cast<int>(k);
    }
    if (a < 0) spec_fail(e.line, "undeclared generator '" + e.a + "' in factor '" + f.name + "'");
    if (b < 0) spec_fail(e.line, "undeclared generator '" + e.b + "' in factor '" + f.name + "'");
    bool both_odd = f.gens[a].odd && f.gens[b].odd;
    int j = e.open == '(' ? 1 : 0;
    if (e.open == '[' && both_odd)
      spec_fail(e.line, "use {" + e.a + "," + e.b + "} for two odd generators", 0, {"{"});
    if (e.open == '{' && !both_odd)
      spec_fail(e.line, "use [" + e.a + "," + e.b + "] unless both generators are odd", 0, {"["});
    OpeValue v;
    if (j == 1) {
      v.vac = parse_coefficient(e.line, trim_copy(e.rhs));
      if (scaled) v.vac = v.vac * f.level;
    } else {
      v = parse_lincomb(e.line, e.rhs, f);
    }
    if (!explicit_keys.insert({a, b, j}).second)
      spec_fail(e.line, "duplicate entry for (" + e.a + "," + e.b + ")");
    entries.emplace_back(a, b, j, v);
  }
  for (const auto& [a, b, j, v] : entries) f.set(a, b, j, v);
  for (const auto& [a, b, j, v] : entries) {
    if (explicit_keys.count({b, a, j})) continue;
    int sign = ((f.gens[a].odd && f.gens[b].odd) ? 1 : 0) + j;
    f.set(b, a, j, detail::ope_scaled(v, sign % 2 ? Scalar(1) : Scalar(-1)));
  }
  return f;
}

}  // namespace detail

/// Parses and validates an algebra spec file; "$level" in a level line is replaced by `level`.
inline AlgebraSpec parse_algebra_spec(std::string_view text, const std::optional<Scalar>& level = std::nullopt,
                                      const ResourceGuards& guards = {}) {
  AlgebraSpec spec{"algebra", {}};
  std::vector<detail::RawFactor> raw;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view full = text.substr(start, end - start);
    start = end + 1;
    ++number;
    std::string_view body = full.substr(0, full.find(';'));
    std::size_t indent = 0;
    while (indent < body.size() && std::isspace(static_cast<unsigned char>(body[indent]))) ++indent;
    detail::SpecLine l{number, indent, detail::trim_copy(body)};
    for (char c : l.text)
      if (!std::isprint(static_cast<unsigned char>(c)) && c != '\t') detail::spec_fail(l, "invalid byte");
    if (l.text.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (l.text.rfind("[factor", 0) == 0) {
      if (l.text.back() != ']') detail::spec_fail(l, "unterminated section header", l.text.size(), {"]"});
      std::string name = detail::trim_copy(std::string_view(l.text).substr(7, l.text.size() - 8));
      if (!detail::valid_ident(name) || name.find('.') != std::string::npos)
        detail::spec_fail(l, "invalid factor name '" + name + "'", 8, {"identifier"});
      for (const auto& f : raw)
        if (f.name == name) detail::spec_fail(l, "duplicate factor '" + name + "'");
      raw.push_back({name, {}, {}, {}, {}, l});
      continue;
    }
    auto colon = l.text.find(':');
    char open = l.text[0];
    if ((open == '[' || open == '{' || open == '(') && l.text.find('=') != std::string::npos) {
      if (raw.empty()) detail::spec_fail(l, "entry outside a [factor] section", 0, {"[factor NAME]"});
      char close = open == '[' ? ']' : (open == '{' ? '}' : ')');
      auto eq = l.text.find('=');
      std::string lhs = detail::trim_copy(std::string_view(l.text).substr(0, eq));
      if (lhs.back() != close) detail::spec_fail(l, "malformed entry", lhs.size(), {std::string(1, close)});
      auto comma = lhs.find(',');
      if (comma == std::string::npos) detail::spec_fail(l, "entry needs two generators", 1, {","});
      std::string a = detail::trim_copy(std::string_view(lhs).substr(1, comma - 1));
      std::string b = detail::trim_copy(std::string_view(lhs).substr(comma + 1, lhs.size() - comma - 2));
      if (a.empty() || b.empty()) detail::spec_fail(l, "entry needs two generators", 1, {"generator"});
      raw.back().entries.push_back({open, a, b, l.text.substr(eq + 1), l});
      continue;
    }
    if (colon == std::string::npos) detail::spec_fail(l, "unrecognised line", 0, {"key:", "[factor NAME]", "entry"});
    std::string key = detail::trim_copy(std::string_view(l.text).substr(0, colon));
    std::string value = detail::trim_copy(std::string_view(l.text).substr(colon + 1));
    if (key == "algebra") {
      if (!raw.empty()) detail::spec_fail(l, "algebra name must precede the factors");
      spec.name = value;
      continue;
    }
    if (raw.empty()) detail::spec_fail(l, "'" + key + "' outside a [factor] section", 0, {"[factor NAME]"});
    detail::RawFactor& f = raw.back();
    if (key == "kind") {
      f.kind = detail::parse_kind(l, value);
    } else if (key == "level") {
      if (value == "$level") {
        if (!level) detail::spec_fail(l, "factor '" + f.name + "' takes its level from the caller but none was given");
        f.level = *level;
      } else {
        f.level = detail::parse_coefficient(l, value);
      }
    } else if (key == "gen") {
      std::istringstream in(value);
      std::vector<std::string> parts;
      for (std::string t; in >> t;) parts.push_back(t);
      if (parts.empty()) detail::spec_fail(l, "gen needs a name", colon + 1, {"name"});
      const std::string& name = parts[0];
      if (!detail::valid_ident(name) || name.find('.') != std::string::npos)
        detail::spec_fail(l, "invalid generator name '" + name + "'", colon + 1, {"identifier"});
      if (parts.size() < 2 || (parts[1] != "even" && parts[1] != "odd"))
        detail::spec_fail(l, "generator '" + name + "' is missing its parity", colon + 1, {"even", "odd"});
      if (parts.size() != 3) detail::spec_fail(l, "generator '" + name + "' needs a conformal weight", colon + 1, {"weight"});
      Rational w;
      try {
        w = Rational::parse(parts[2]);
      } catch (const Error&) {
        detail::spec_fail(l, "malformed weight '" + parts[2] + "' for generator '" + name + "'", colon + 1, {"weight"});
      }
      Rational w2 = Rational(2) * w;
      if (!w2.is_integer() || w2.sign() <= 0)
        detail::spec_fail(l, "weight of '" + name + "' must be a positive multiple of 1/2");
      for (const auto& g : f.gens)
        if (g.name == name) detail::spec_fail(l, "duplicate generator '" + name + "'");
      f.gens.push_back({name, parts[1] == "odd", w2.to_long()});
    } else {
      detail::spec_fail(l, "unknown key '" + key + "'", 0, {"kind", "level", "gen"});
    }
  }
  if (raw.empty()) throw ParseError("no [factor] sections", number, 1, {"[factor NAME]"});
  for (const auto& r : raw) {
    Factor f = detail::build_factor(r, guards);
    try {
      validate_factor(f);
    } catch (const ValidationError& e) {
      throw ValidationError("factor '" + f.name + "' (line " + std::to_string(r.header.number) + "): " + e.what());
    }
    spec.factors.push_back(std::move(f));
  }
  return spec;
}

inline AlgebraPtr load_algebra(std::string_view text, const std::optional<Scalar>& level = std::nullopt,
                               const ResourceGuards& guards = {}) {
  return Algebra::create(parse_algebra_spec(text, level, guards), guards);
}

}  // namespace bpw
