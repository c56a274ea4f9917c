#pragma once

// Sum-of-terms polynomial grammar:
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := INT ['/' INT] | VAR ['^' INT]
//
// Variables are matched greedily against the ring's declared names, so `xy`
// reads as x*y when only x and y are declared. Parentheses are rejected.

#include <cctype>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "detachgb/module.hpp"

namespace detachgb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

template <FieldElement C>
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr<C>& ring) : text_(text), ring_(ring) {}

  Polynomial<C> parse() {
    std::vector<Term<C>> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') throw unexpected();
      ++pos_;
      terms.push_back(parse_term(op == '-'));
    }
    return Polynomial<C>(ring_, std::move(terms));
  }

 private:
  Term<C> parse_term(bool negative) {
    mpz_class num = 1, den = 1;
    std::vector<Monomial::exponent_type> exps(ring_->nvars(), 0);
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);
    bool first = true;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (!first) {
        if (ch == '*') {
          ++pos_;
          skip_ws();
          if (at_end()) throw ParseError("expected a factor after '*'", pos_);
          ch = peek();
        } else if (ch == '+' || ch == '-') {
          break;
        }
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        auto [n, d] = parse_number();
        num *= n;
        den *= d;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        auto [var, e] = parse_power();
        exps[var] += e;
      } else if (ch == '/') {
        throw ParseError("division is only allowed inside a numeric coefficient", pos_);
      } else if (ch == '(' || ch == ')') {
        throw ParseError("parentheses are not supported", pos_);
      } else {
        throw unexpected();
      }
      first = false;
    }
    if (negative) num = -num;
    return {ring_->coeff(num, den), Monomial(std::move(exps))};
  }

  std::pair<mpz_class, mpz_class> parse_number() {
    mpz_class n = read_int();
    mpz_class d = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("division is only allowed inside a numeric coefficient", pos_);
      std::size_t at = pos_;
      d = read_int();
      if (d == 0) throw ParseError("zero denominator", at);
    }
    return {n, d};
  }

  std::pair<std::size_t, Monomial::exponent_type> parse_power() {
    std::size_t start = pos_;
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      const auto& name = ring_->var_names()[i];
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = i;
        best_len = name.size();
      }
    }
    if (best_len == 0) {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      throw ParseError("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'", start);
    }
    pos_ += best_len;
    Monomial::exponent_type e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("malformed exponent", pos_);
      std::size_t at = pos_;
      mpz_class v = read_int();
      if (!v.fits_uint_p() || v > 1000000) throw ParseError("exponent out of range", at);
      e = static_cast<Monomial::exponent_type>(v.get_ui());
    }
    return {best, e};
  }

  mpz_class read_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  ParseError unexpected() const {
    return ParseError(std::string("unexpected character '") + peek() + "'", pos_);
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  const RingPtr<C>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <FieldElement C>
Polynomial<C> parse_poly(std::string_view text, const RingPtr<C>& ring) {
  return detail::PolyParser<C>(text, ring).parse();
}

/// Parses `x*y*e2` or `e2` (one-based position) into a module term.
template <FieldElement C>
ModuleMonomial parse_module_monomial(std::string_view text, const RingPtr<C>& ring,
                                     std::size_t rank) {
  static const std::regex re(R"(^\s*(?:(.*?)\s*\*\s*)?e(\d+)\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("malformed module term '" + s + "'", 0);
  std::size_t pos = std::stoul(m[2].str());
  if (pos == 0 || pos > rank)
    throw ParseError("unit vector index e" + m[2].str() + " outside 1.." + std::to_string(rank),
                     static_cast<std::size_t>(m.position(2)));
  Monomial mono = ring->one_monomial();
  if (m[1].matched && !m[1].str().empty()) {
    auto p = parse_poly(m[1].str(), ring);
    if (p.size() != 1 || !is_one(p.lc())) throw ParseError("module term needs a monic power product", 0);
    mono = p.lpp();
  }
  return {mono, pos - 1};
}

}  // namespace detachgb
