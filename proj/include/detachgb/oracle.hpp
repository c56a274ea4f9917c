#pragma once

// Reference implementation used only for cross-checking: plain Buchberger
// with every reduction step mirrored on a cofactor vector, a Groebner basis
// test, and a seeded generator of small random systems.

#include <random>
#include <stdexcept>
#include <vector>

#include "detachgb/labeled.hpp"
#include "detachgb/reduction.hpp"

namespace detachgb {

template <FieldElement C>
struct OracleBasis {
  std::vector<Polynomial<C>> generators;
  /// poly = vec . generators for every element.
  std::vector<FullLabeledPoly<C>> elements;

  std::vector<Polynomial<C>> polys() const {
    std::vector<Polynomial<C>> out;
    for (const auto& e : elements) out.push_back(e.poly);
    return out;
  }
};

struct OracleOptions {
  /// Re-check poly = vec . F after every single reduction step (slow).
  bool check_every_step = false;
};

template <FieldElement C>
OracleBasis<C> buchberger_with_cofactors(const std::vector<Polynomial<C>>& gens,
                                         OracleOptions options = {}) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const auto& ring = gens.front().ring();
  const std::size_t m = gens.size();
  OracleBasis<C> B{gens, {}};

  auto check = [&](const FullLabeledPoly<C>& e) {
    if (!(modvec_dot(e.vec, gens) == e.poly))
      throw std::logic_error("oracle lost its cofactor identity");
  };

  // Full reduction of h by the current basis, mirrored on the vector.
  auto reduce = [&](FullLabeledPoly<C> h) {
    std::vector<Term<C>> rem;
    ModuleVector<C> rem_vec = h.vec;
    Polynomial<C> p = h.poly;
    while (!p.is_zero()) {
      const auto lt = p.lm();
      const FullLabeledPoly<C>* reducer = nullptr;
      for (const auto& g : B.elements)
        if (mono_divides(g.poly.lpp(), lt.mono)) {
          reducer = &g;
          break;
        }
      if (!reducer) {
        rem.push_back(lt);
        p = p.tail();
        continue;
      }
      C c = lt.coeff / reducer->poly.lc();
      Monomial t = mono_div(lt.mono, reducer->poly.lpp());
      p = p.sub_scaled(c, t, reducer->poly);
      rem_vec = rem_vec.sub_scaled(c, t, reducer->vec);
      if (options.check_every_step) {
        std::vector<Term<C>> partial = rem;
        for (const auto& term : p.terms()) partial.push_back(term);
        check({Polynomial<C>(ring, std::move(partial)), rem_vec});
      }
    }
    return FullLabeledPoly<C>{Polynomial<C>(ring, std::move(rem)), std::move(rem_vec)};
  };

  struct Pair {
    std::size_t i, j;
    std::uint64_t degree;
  };
  std::vector<Pair> pairs;
  auto add = [&](FullLabeledPoly<C> e) {
    C inv = C(ring->one() / e.poly.lc());
    e = labeled_scale(inv, ring->one_monomial(), e);
    check(e);
    B.elements.push_back(std::move(e));
    const std::size_t k = B.elements.size() - 1;
    for (std::size_t i = 0; i < k; ++i)
      pairs.push_back({i, k, mono_lcm(B.elements[i].poly.lpp(), B.elements[k].poly.lpp()).degree()});
  };

  for (std::size_t j = 0; j < m; ++j) {
    if (gens[j].is_zero()) throw std::invalid_argument("zero generator");
    add(generator_element(std::span<const Polynomial<C>>(gens), j));
  }

  while (!pairs.empty()) {
    // normal strategy: smallest lcm degree, oldest pair first on ties
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it)
      if (it->degree < best->degree) best = it;
    Pair pr = *best;
    pairs.erase(best);
    const auto& f = B.elements[pr.i];
    const auto& g = B.elements[pr.j];
    Monomial l = mono_lcm(f.poly.lpp(), g.poly.lpp());
    Monomial tf = mono_div(l, f.poly.lpp()), tg = mono_div(l, g.poly.lpp());
    FullLabeledPoly<C> s{f.poly.scale_term(ring->one(), tf).sub_scaled(ring->one(), tg, g.poly),
                         f.vec.scale_term(ring->one(), tf).sub_scaled(ring->one(), tg, g.vec)};
    auto r = reduce(std::move(s));
    check(r);
    if (!r.poly.is_zero()) add(std::move(r));
  }
  return B;
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
template <FieldElement C>
bool is_groebner(const std::vector<Polynomial<C>>& G) {
  for (const auto& g : G)
    if (g.is_zero()) throw std::invalid_argument("is_groebner expects nonzero elements");
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
  return true;
}

struct RandomSystemParams {
  std::size_t n_gens = 3;
  std::uint32_t max_deg = 3;
  std::size_t max_terms = 4;
  std::uint64_t seed = 1;
};

/// Reproducible sparse system over the given ring. Each generator has
/// 1..max_terms terms of total degree <= max_deg and at least one
/// non-constant term. Rational coefficients come from {-3..3}\{0}, prime
/// field ones uniformly from the nonzero residues.
template <FieldElement C>
std::vector<Polynomial<C>> random_system(const RingPtr<C>& ring, RandomSystemParams params) {
  if (params.n_gens == 0 || params.max_deg == 0 || params.max_terms == 0)
    throw std::invalid_argument("random_system parameters must be positive");
  std::mt19937_64 rng(params.seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
  };
  auto random_coeff = [&]() -> C {
    if (ring->field().is_rational()) {
      long v = static_cast<long>(uniform(1, 6));
      return ring->coeff(v <= 3 ? v : 3 - v);
    }
    return ring->coeff(static_cast<long>(uniform(1, ring->field().modulus - 1)));
  };
  std::vector<Polynomial<C>> out;
  while (out.size() < params.n_gens) {
    std::vector<Term<C>> terms;
    std::size_t nterms = uniform(1, params.max_terms);
    for (std::size_t k = 0; k < nterms; ++k) {
      std::vector<Monomial::exponent_type> ex(ring->nvars(), 0);
      auto d = uniform(0, params.max_deg);
      for (std::uint64_t u = 0; u < d; ++u) ++ex[uniform(0, ring->nvars() - 1)];
      terms.push_back({random_coeff(), Monomial(std::move(ex))});
    }
    Polynomial<C> f(ring, std::move(terms));
    if (f.is_zero() || f.lpp().is_one()) continue;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detachgb
