#pragma once

// Canonical text rendering: terms in decreasing order, `*` between factors,
// unit coefficients elided except on the constant term, signs folded into
// the joining operator. Example: `y*z^3 - x^2*t^2`.

#include <ostream>
#include <sstream>
#include <string>

#include "detachgb/module.hpp"

namespace detachgb {

/// Signed decimal form; prime-field residues use the symmetric range.
inline std::string signed_coeff_string(const Rational& c) { return c.get_str(); }
inline std::string signed_coeff_string(const Zp& c) {
  std::int64_t v = c.value();
  if (v > static_cast<std::int64_t>(c.modulus() / 2)) v -= c.modulus();
  return std::to_string(v);
}

template <FieldElement C>
std::string to_string(const Monomial& m, const PolyRing<C>& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_names()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

template <FieldElement C>
std::string to_string(const Polynomial<C>& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& [c, m] : f.terms()) {
    std::string cs = signed_coeff_string(c);
    bool negative = cs.front() == '-';
    if (negative) cs.erase(0, 1);
    std::string body;
    if (m.is_one()) {
      body = cs;
    } else {
      body = (cs == "1" ? std::string() : cs + "*") + to_string(m, ring);
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

/// `x*y*e2`, or `e2` for a bare unit vector; positions print one-based.
template <FieldElement C>
std::string to_string(const ModuleMonomial& s, const PolyRing<C>& ring) {
  std::string e = "e" + std::to_string(s.position + 1);
  return s.mono.is_one() ? e : to_string(s.mono, ring) + "*" + e;
}

/// `[p1, p2, ..., pm]`
template <FieldElement C>
std::string to_string(const ModuleVector<C>& v) {
  std::string out = "[";
  for (std::size_t j = 0; j < v.rank(); ++j) {
    if (j) out += ", ";
    out += to_string(v[j]);
  }
  return out + "]";
}

template <FieldElement C>
std::ostream& operator<<(std::ostream& os, const Polynomial<C>& f) {
  return os << to_string(f);
}

template <FieldElement C>
std::ostream& operator<<(std::ostream& os, const ModuleVector<C>& v) {
  return os << to_string(v);
}

}  // namespace detachgb
