#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "detachgb/coefficient.hpp"
#include "detachgb/monomial.hpp"

namespace detachgb {

/// K[x_1..x_n] with a fixed term order. Shared immutably by every polynomial
/// built over it.
template <FieldElement C>
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, TermOrder order, FieldSpec field)
      : vars_(std::move(vars)), order_(order), field_(field) {
    if (vars_.empty()) throw std::invalid_argument("a ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.empty()) throw std::invalid_argument("empty variable name");
      if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
    }
    if constexpr (std::is_same_v<C, Zp>) {
      if (field_.is_rational()) throw std::invalid_argument("Zp coefficients need a prime modulus");
    } else {
      if (!field_.is_rational()) throw std::invalid_argument("rational coefficients take no modulus");
    }
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  TermOrder order() const { return order_; }
  const FieldSpec& field() const { return field_; }

  C coeff(long n) const { return CoefficientFactory<C>::make(field_, n); }
  C coeff(const mpz_class& num, const mpz_class& den) const {
    return CoefficientFactory<C>::make(field_, num, den);
  }
  C one() const { return coeff(1); }
  Monomial one_monomial() const { return Monomial(nvars()); }

  /// Monomial of variable i to the power e.
  Monomial var(std::size_t i, Monomial::exponent_type e = 1) const {
    std::vector<Monomial::exponent_type> ex(nvars(), 0);
    ex.at(i) = e;
    return Monomial(std::move(ex));
  }

  std::strong_ordering cmp(const Monomial& a, const Monomial& b) const {
    return ring_cmp(a, b, order_);
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.field_ == b.field_;
  }

 private:
  std::vector<std::string> vars_;
  TermOrder order_;
  FieldSpec field_;
};

template <FieldElement C>
using RingPtr = std::shared_ptr<const PolyRing<C>>;

template <FieldElement C>
RingPtr<C> make_ring(std::vector<std::string> vars, TermOrder order = TermOrder::grevlex,
                     FieldSpec field = {}) {
  return std::make_shared<const PolyRing<C>>(std::move(vars), order, field);
}

template <FieldElement C>
struct Term {
  C coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms strictly decreasing in the ring order with
/// nonzero coefficients. The empty term list is the zero polynomial.
template <FieldElement C>
class Polynomial {
 public:
  using coeff_type = C;
  using term_type = Term<C>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<C> ring) : ring_(std::move(ring)) {}

  /// Sorts and combines arbitrary terms.
  Polynomial(RingPtr<C> ring, std::vector<term_type> terms) : ring_(std::move(ring)) {
    for (const auto& t : terms)
      if (t.mono.nvars() != ring_->nvars()) throw ContextError("term arity differs from ring");
    std::sort(terms.begin(), terms.end(), [&](const term_type& a, const term_type& b) {
      return ring_->cmp(a.mono, b.mono) > 0;
    });
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().mono == t.mono) {
        terms_.back().coeff = terms_.back().coeff + t.coeff;
        if (::detachgb::is_zero(terms_.back().coeff)) terms_.pop_back();
      } else if (!::detachgb::is_zero(t.coeff)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  static Polynomial term(RingPtr<C> ring, C c, Monomial m) {
    Polynomial p(std::move(ring));
    if (!::detachgb::is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
  }
  static Polynomial constant(RingPtr<C> ring, C c) {
    auto one = ring->one_monomial();
    return term(std::move(ring), std::move(c), std::move(one));
  }

  const RingPtr<C>& ring() const { return ring_; }
  const std::vector<term_type>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  explicit operator bool() const { return !terms_.empty(); }

  const Monomial& lpp() const {
    require_nonzero("lpp");
    return terms_.front().mono;
  }
  const C& lc() const {
    require_nonzero("lc");
    return terms_.front().coeff;
  }
  const term_type& lm() const {
    require_nonzero("lm");
    return terms_.front();
  }

  /// Everything but the leading term.
  Polynomial tail() const {
    Polynomial r(ring_);
    if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  /// Scales so that the leading coefficient is one; zero stays zero.
  Polynomial monic() const {
    if (is_zero() || is_one(lc())) return *this;
    return scale_term(C(ring_->one() / lc()), ring_->one_monomial());
  }

  /// c * t * this
  Polynomial scale_term(const C& c, const Monomial& t) const {
    Polynomial r(ring_);
    if (::detachgb::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& term : terms_) r.terms_.push_back({C(term.coeff * c), mono_mul(term.mono, t)});
    return r;
  }

  /// this - c * t * g, computed in a single merge.
  Polynomial sub_scaled(const C& c, const Monomial& t, const Polynomial& g) const {
    Polynomial r(pick_ring(g));
    if (g.is_zero() || ::detachgb::is_zero(c)) return *this;
    const auto& ring = *r.ring_;
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end()) {
        r.terms_.push_back(*a++);
        continue;
      }
      Monomial bm = mono_mul(b->mono, t);
      if (a == terms_.end()) {
        r.terms_.push_back({C(-(b->coeff * c)), std::move(bm)});
        ++b;
        continue;
      }
      auto o = ring.cmp(a->mono, bm);
      if (o > 0) {
        r.terms_.push_back(*a++);
      } else if (o < 0) {
        r.terms_.push_back({C(-(b->coeff * c)), std::move(bm)});
        ++b;
      } else {
        C s = a->coeff - b->coeff * c;
        if (!::detachgb::is_zero(s)) r.terms_.push_back({std::move(s), a->mono});
        ++a;
        ++b;
      }
    }
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g.ring_ ? g : Polynomial(f.ring_);
    if (g.is_zero()) return f;
    const auto& ring = f.pick_ring(g);
    return f.sub_scaled(-ring->one(), ring->one_monomial(), g);
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) return f.ring_ ? f : Polynomial(g.ring_);
    const auto& ring = f.pick_ring(g);
    return f.sub_scaled(ring->one(), ring->one_monomial(), g);
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Polynomial operator*(const C& c, const Polynomial& f) {
    return f.is_zero() ? f : f.scale_term(c, f.ring_->one_monomial());
  }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    Polynomial r(f.pick_ring(g));
    for (const auto& t : f.terms_) r = r.sub_scaled(-t.coeff, t.mono, g);
    return r;
  }
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  /// Equality of values; the ring is assumed shared.
  friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.terms_ == g.terms_; }

 private:
  void require_nonzero(const char* what) const {
    if (terms_.empty()) throw std::domain_error(std::string(what) + " of the zero polynomial");
  }
  const RingPtr<C>& pick_ring(const Polynomial& g) const {
    if (ring_ && g.ring_ && ring_ != g.ring_ && !(*ring_ == *g.ring_))
      throw ContextError("polynomials from different rings");
    if (!ring_ && !g.ring_) throw ContextError("polynomial without a ring");
    return ring_ ? ring_ : g.ring_;
  }

  RingPtr<C> ring_;
  std::vector<term_type> terms_;
};

/// Three-way comparison of leading power products with lpp(0) below every monomial.
template <FieldElement C>
std::strong_ordering lpp_cmp(const Polynomial<C>& f, const Polynomial<C>& g, TermOrder order) {
  if (f.is_zero() || g.is_zero()) return !f.is_zero() <=> !g.is_zero();
  return ring_cmp(f.lpp(), g.lpp(), order);
}

}  // namespace detachgb
