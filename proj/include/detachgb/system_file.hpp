#pragma once

// Line-oriented polynomial system files:
//
//   field: QQ            (or: Fp 32003)
//   order: grevlex       (grevlex | grlex | lex)
//   vars: x y z t        (first variable is the largest)
//   gens:
//     y*z^3 - x^2*t^2    (one generator per line, f_1 first)
//   sigbasis:            (optional: a signature-labeled basis, in stamp order)
//     x*y*e2 : x*y^3*t - z^4*t
//
// `#` starts a comment.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "detachgb/labeled.hpp"
#include "detachgb/parse.hpp"

namespace detachgb {

struct SystemFile {
  FieldSpec field;
  TermOrder order = TermOrder::grevlex;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  /// (signature, polynomial) texts.
  std::vector<std::pair<std::string, std::string>> sigbasis;

  template <FieldElement C>
  RingPtr<C> ring() const {
    return make_ring<C>(vars, order, field);
  }

  template <FieldElement C>
  std::vector<Polynomial<C>> generators(const RingPtr<C>& ring) const {
    std::vector<Polynomial<C>> out;
    for (const auto& g : gens) out.push_back(parse_poly(g, ring));
    return out;
  }

  template <FieldElement C>
  SigBasis<C> signature_basis(const RingPtr<C>& ring) const {
    SigBasis<C> S{generators(ring), {}};
    for (const auto& [sig, poly] : sigbasis)
      S.elements.push_back({parse_poly(poly, ring), parse_module_monomial(sig, ring, gens.size()),
                            S.elements.size()});
    return S;
  }
};

class SystemFileError : public std::runtime_error {
 public:
  SystemFileError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

inline SystemFile parse_system(std::istream& in) {
  SystemFile sys;
  enum class Section { header, gens, sigbasis } section = Section::header;
  bool have_vars = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = detail::trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : detail::trim(line.substr(0, colon));
    std::string value = colon == std::string::npos ? "" : detail::trim(line.substr(colon + 1));
    if (key == "field") {
      std::istringstream ss(value);
      std::string kind;
      ss >> kind;
      if (kind == "QQ") {
        sys.field = FieldSpec::rationals();
      } else if (kind == "Fp") {
        long long p = 0;
        if (!(ss >> p) || p <= 0 || p > 0xffffffffLL) throw SystemFileError("Fp needs a modulus", lineno);
        try {
          sys.field = FieldSpec::prime(static_cast<std::uint32_t>(p));
        } catch (const std::invalid_argument& e) {
          throw SystemFileError(e.what(), lineno);
        }
      } else {
        throw SystemFileError("unknown field '" + value + "'", lineno);
      }
      section = Section::header;
    } else if (key == "order") {
      try {
        sys.order = parse_term_order(value);
      } catch (const std::invalid_argument& e) {
        throw SystemFileError(e.what(), lineno);
      }
      section = Section::header;
    } else if (key == "vars") {
      std::istringstream ss(value);
      sys.vars.clear();
      for (std::string v; ss >> v;) sys.vars.push_back(v);
      if (sys.vars.empty()) throw SystemFileError("no variables declared", lineno);
      have_vars = true;
      section = Section::header;
    } else if (key == "gens") {
      section = Section::gens;
      if (!value.empty()) sys.gens.push_back(value);
    } else if (key == "sigbasis") {
      section = Section::sigbasis;
    } else if (section == Section::gens && colon == std::string::npos) {
      sys.gens.push_back(line);
    } else if (section == Section::sigbasis && colon != std::string::npos) {
      sys.sigbasis.emplace_back(key, value);
    } else {
      throw SystemFileError("unexpected line '" + line + "'", lineno);
    }
  }
  if (!have_vars) throw SystemFileError("missing 'vars:' line", lineno);
  if (sys.gens.empty()) throw SystemFileError("no generators", lineno);
  return sys;
}

inline SystemFile parse_system_text(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

inline SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_system(in);
}

}  // namespace detachgb
