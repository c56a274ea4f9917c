#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace detachgb {

/// Raised when objects from different rings or modules meet.
class ContextError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Power product x^a over a fixed number of variables.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) { recompute_degree(); }
  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) { recompute_degree(); }

  std::size_t nvars() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<exponent_type>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  void recompute_degree() {
    degree_ = 0;
    for (auto e : exps_) degree_ += e;
  }

  std::vector<exponent_type> exps_;
  std::uint64_t degree_ = 0;

  friend Monomial mono_mul(const Monomial&, const Monomial&);
  friend Monomial mono_div(const Monomial&, const Monomial&);
  friend Monomial mono_lcm(const Monomial&, const Monomial&);
  friend Monomial mono_gcd(const Monomial&, const Monomial&);
};

inline void check_same_arity(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw ContextError("monomials over " + std::to_string(a.nvars()) + " and " +
                       std::to_string(b.nvars()) + " variables");
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

/// True iff a divides b.
inline bool mono_divides(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// b / a; a must divide b.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw std::domain_error("mono_div: divisor does not divide dividend");
  Monomial r = b;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= a.exps_[i];
  r.degree_ = b.degree_ - a.degree_;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.recompute_degree();
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.recompute_degree();
  return r;
}

enum class TermOrder { lex, grlex, grevlex };

inline std::string_view to_string(TermOrder o) {
  switch (o) {
    case TermOrder::lex: return "lex";
    case TermOrder::grlex: return "grlex";
    case TermOrder::grevlex: return "grevlex";
  }
  return "?";
}

inline TermOrder parse_term_order(std::string_view s) {
  if (s == "lex") return TermOrder::lex;
  if (s == "grlex") return TermOrder::grlex;
  if (s == "grevlex") return TermOrder::grevlex;
  throw std::invalid_argument("unknown term order '" + std::string(s) + "'");
}

/// Three-way comparison under a term order. Variable 0 is the largest.
inline std::strong_ordering ring_cmp(const Monomial& a, const Monomial& b, TermOrder order) {
  check_same_arity(a, b);
  const std::size_t n = a.nvars();
  switch (order) {
    case TermOrder::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case TermOrder::grlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case TermOrder::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      // the smaller exponent in the last differing variable wins
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

/// Term x^a e_j of a free module R^m. `position` is zero-based (e_1 is 0).
struct ModuleMonomial {
  Monomial mono;
  std::size_t position = 0;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

/// Position-over-term: a smaller position is larger; ties fall back to the ring order.
inline std::strong_ordering module_cmp(const ModuleMonomial& a, const ModuleMonomial& b,
                                       TermOrder order) {
  if (a.position != b.position) return b.position <=> a.position;
  return ring_cmp(a.mono, b.mono, order);
}

inline ModuleMonomial mono_mul(const Monomial& t, const ModuleMonomial& s) {
  return {mono_mul(t, s.mono), s.position};
}

/// True iff a divides b as module terms (same position, monomial divides).
inline bool mono_divides(const ModuleMonomial& a, const ModuleMonomial& b) {
  return a.position == b.position && mono_divides(a.mono, b.mono);
}

}  // namespace detachgb

template <>
struct std::hash<detachgb::Monomial> {
  std::size_t operator()(const detachgb::Monomial& m) const { return m.hash(); }
};
