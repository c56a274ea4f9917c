#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "detachgb/polynomial.hpp"

namespace detachgb {

/// Quotients and remainder of multivariate division: f = sum q_i g_i + r.
template <FieldElement C>
struct Division {
  std::vector<Polynomial<C>> quotients;
  Polynomial<C> remainder;
};

namespace detail {

template <FieldElement C>
std::optional<std::size_t> first_divisor(const Monomial& m, std::span<const Polynomial<C>> divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (!divisors[i].is_zero() && mono_divides(divisors[i].lpp(), m)) return i;
  return std::nullopt;
}

}  // namespace detail

/// Full division, leading term first; reducer is the lowest-index divisor
/// whose lpp divides the current leading term. Zero divisors are ignored.
template <FieldElement C>
Division<C> divide(const Polynomial<C>& f, std::span<const Polynomial<C>> divisors,
                   bool track_quotients = true) {
  Division<C> out;
  const auto& ring = f.ring();
  if (track_quotients) out.quotients.assign(divisors.size(), Polynomial<C>(ring));
  out.remainder = Polynomial<C>(ring);
  std::vector<Term<C>> rem;
  Polynomial<C> p = f;
  while (!p.is_zero()) {
    const auto& lt = p.lm();
    if (auto i = detail::first_divisor(lt.mono, divisors)) {
      const auto& g = divisors[*i];
      C c = lt.coeff / g.lc();
      Monomial t = mono_div(lt.mono, g.lpp());
      if (track_quotients)
        out.quotients[*i] += Polynomial<C>::term(ring, c, t);
      p = p.sub_scaled(c, t, g);
    } else {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  // terms were emitted in strictly decreasing order
  out.remainder = Polynomial<C>(ring, std::move(rem));
  return out;
}

template <FieldElement C>
Division<C> divide(const Polynomial<C>& f, const std::vector<Polynomial<C>>& divisors,
                   bool track_quotients = true) {
  return divide(f, std::span<const Polynomial<C>>(divisors), track_quotients);
}

template <FieldElement C>
Polynomial<C> normal_form(const Polynomial<C>& f, std::span<const Polynomial<C>> divisors) {
  return divide(f, divisors, false).remainder;
}

template <FieldElement C>
Polynomial<C> normal_form(const Polynomial<C>& f, const std::vector<Polynomial<C>>& divisors) {
  return normal_form(f, std::span<const Polynomial<C>>(divisors));
}

/// Classical S-polynomial lcm/lc(f) f - lcm/lc(g) g.
template <FieldElement C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g) {
  Monomial l = mono_lcm(f.lpp(), g.lpp());
  auto a = f.scale_term(C(f.ring()->one() / f.lc()), mono_div(l, f.lpp()));
  return a.sub_scaled(C(g.ring()->one() / g.lc()), mono_div(l, g.lpp()), g);
}

/// The reduced Groebner basis spanned by a Groebner basis G: monic, no term
/// of any element divisible by another element's lpp, sorted ascending by lpp.
template <FieldElement C>
std::vector<Polynomial<C>> interreduce(std::span<const Polynomial<C>> basis) {
  std::vector<Polynomial<C>> gens;
  for (const auto& g : basis)
    if (!g.is_zero()) gens.push_back(g.monic());
  if (gens.empty()) return {};
  const TermOrder order = gens.front().ring()->order();

  // Minimalize: drop any element whose lpp is divisible by another's
  // (equal lpps keep the first occurrence).
  std::vector<Polynomial<C>> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !mono_divides(gens[j].lpp(), gens[i].lpp())) continue;
      redundant = gens[j].lpp() != gens[i].lpp() || j < i;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return ring_cmp(a.lpp(), b.lpp(), order) < 0;
  });
  // Tail-reduce each element by the others; lpps are untouched.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<C>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& f = minimal[i];
    Polynomial<C> head = Polynomial<C>::term(f.ring(), f.lc(), f.lpp());
    minimal[i] = (head + normal_form(f - head, others)).monic();
  }
  return minimal;
}

template <FieldElement C>
std::vector<Polynomial<C>> interreduce(const std::vector<Polynomial<C>>& basis) {
  return interreduce(std::span<const Polynomial<C>>(basis));
}

}  // namespace detachgb
