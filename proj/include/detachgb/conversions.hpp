#pragma once

// Conversions between the labeling levels:
//   sig2mono   signature-labeled GB -> monomial-labeled GB (recovers the
//              hidden leading coefficient of each cofactor vector)
//   mono2full  monomial-labeled GB  -> full-labeled GB (recovers the whole
//              cofactor vector)

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "detachgb/labeled.hpp"

namespace detachgb {

/// Input that cannot come from a genuine labeled Groebner basis.
class InconsistentBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picks one index out of the eligible reducers (given in basis order).
using ReducerChooser = std::function<std::size_t(std::span<const std::size_t>)>;

/// Top-reduces f, labeled with signature `sig`, by elements g_i^(t_i) of S
/// satisfying lpp(g_i) | lpp(g) and (lpp(g)/lpp(g_i)) t_i < sig, until no
/// such element exists or g = 0. The default choice is the earliest element.
template <FieldElement C>
Polynomial<C> incomplete_standard_form(Polynomial<C> g, const ModuleMonomial& sig,
                                       const SigBasis<C>& S, const ReducerChooser& choose = {}) {
  const auto& ring = S.ring();
  const TermOrder order = ring->order();
  std::vector<std::size_t> eligible;
  while (!g.is_zero()) {
    eligible.clear();
    for (std::size_t i = 0; i < S.elements.size(); ++i) {
      const auto& e = S.elements[i];
      if (e.poly.is_zero() || !mono_divides(e.poly.lpp(), g.lpp())) continue;
      if (module_cmp(mono_mul(mono_div(g.lpp(), e.poly.lpp()), e.sig), sig, order) < 0)
        eligible.push_back(i);
      if (!choose && !eligible.empty()) break;
    }
    if (eligible.empty()) break;
    std::size_t pick = choose ? choose(eligible) : eligible.front();
    const auto& r = S.elements.at(pick).poly;
    g = g.sub_scaled(C(g.lc() / r.lc()), mono_div(g.lpp(), r.lpp()), r);
  }
  return g;
}

/// For every g_i^(t_i), t_i = x^a e_j: the coefficient c_i with a hidden
/// vector of leading monomial c_i t_i, read off as lc(g)/lc(g0) from the
/// incomplete standard forms g of g_i and g0 of x^a f_j (1 when g = 0).
template <FieldElement C>
MonoBasis<C> sig2mono(const SigBasis<C>& S, const ReducerChooser& choose = {}) {
  if (S.generators.empty()) throw std::invalid_argument("labeled basis without generators");
  const auto& ring = S.ring();
  MonoBasis<C> M{S.generators, {}};
  M.elements.reserve(S.elements.size());
  for (const auto& e : S.elements) {
    if (e.sig.position >= S.rank()) throw ContextError("signature position outside the module");
    Polynomial<C> g = incomplete_standard_form(e.poly, e.sig, S, choose);
    C c = ring->one();
    if (!g.is_zero()) {
      Polynomial<C> shifted = S.generators[e.sig.position].scale_term(ring->one(), e.sig.mono);
      Polynomial<C> g0 = incomplete_standard_form(std::move(shifted), e.sig, S, choose);
      if (g0.is_zero())
        throw InconsistentBasis("standard form of " + std::to_string(e.stamp) +
                                " is nonzero but that of its generator multiple vanishes");
      c = g.lc() / g0.lc();
    }
    M.elements.push_back({e.poly, std::move(c), e.sig, e.stamp});
  }
  return M;
}

/// Coefficients p_i with f = c x^a f_j + sum p_i g_i and x^a e_j > lpp(p_i v_i),
/// obtained by reducing h = f - c x^a f_j to zero with reducers g_i^[v_i] of G
/// whose scaled signature (lpp(h)/lpp(g_i)) lpp(v_i) stays below x^a e_j.
/// The earliest qualifying reducer is used.
template <FieldElement C>
std::vector<Polynomial<C>> representation(const C& c, const ModuleMonomial& sig,
                                          const Polynomial<C>& f,
                                          std::span<const FullLabeledPoly<C>> G,
                                          std::span<const Polynomial<C>> gens) {
  if (sig.position >= gens.size()) throw ContextError("signature position outside the module");
  const auto& ring = gens.front().ring();
  const TermOrder order = ring->order();
  std::vector<Polynomial<C>> p(G.size(), Polynomial<C>(ring));
  Polynomial<C> h = f.sub_scaled(c, sig.mono, gens[sig.position]);
  while (!h.is_zero()) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < G.size() && !pick; ++i) {
      const auto& g = G[i];
      if (g.poly.is_zero() || g.vec.is_zero() || !mono_divides(g.poly.lpp(), h.lpp())) continue;
      if (module_cmp(mono_mul(mono_div(h.lpp(), g.poly.lpp()), g.vec.lpp()), sig, order) < 0)
        pick = i;
    }
    if (!pick)
      throw InconsistentBasis("representation: remainder " + std::string("has an irreducible leading term; "
                              "input is not a monomial-labeled element over this basis"));
    const auto& g = G[*pick].poly;
    // the quotient is taken before h changes
    C q = h.lc() / g.lc();
    Monomial t = mono_div(h.lpp(), g.lpp());
    p[*pick] += Polynomial<C>::term(ring, q, t);
    h = h.sub_scaled(q, t, g);
  }
  return p;
}

/// Processing order of mono2full: ascending signature, then stamp.
template <FieldElement C>
std::vector<std::size_t> signature_order(const MonoBasis<C>& M) {
  std::vector<std::size_t> idx(M.elements.size());
  std::iota(idx.begin(), idx.end(), 0);
  const TermOrder order = M.ring()->order();
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto o = module_cmp(M.elements[a].sig, M.elements[b].sig, order);
    if (o != 0) return o < 0;
    return M.elements[a].stamp < M.elements[b].stamp;
  });
  return idx;
}

/// Full-labeled basis from a monomial-labeled one. Output elements follow the
/// processing order (ascending signature) and satisfy poly = vec . F with
/// lm(vec) = c t.
template <FieldElement C>
FullBasis<C> mono2full(const MonoBasis<C>& M) {
  if (M.generators.empty()) throw std::invalid_argument("labeled basis without generators");
  const auto& ring = M.ring();
  const std::span<const Polynomial<C>> gens(M.generators);
  const TermOrder order = ring->order();
  FullBasis<C> G{M.generators, {}};
  G.elements.reserve(M.elements.size());
  const ModuleMonomial* previous = nullptr;
  for (std::size_t k : signature_order(M)) {
    const auto& e = M.elements[k];
    if (previous && module_cmp(*previous, e.sig, order) > 0)
      throw std::logic_error("mono2full: signatures processed out of order");
    previous = &e.sig;
    auto p = representation(e.coeff, e.sig, e.poly,
                            std::span<const FullLabeledPoly<C>>(G.elements), gens);
    auto v = ModuleVector<C>::unit(ring, M.rank(), e.sig, e.coeff);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!p[i].is_zero()) v = v.add_mul(p[i], G.elements[i].vec);
    G.elements.push_back({e.poly, std::move(v)});
  }
  return G;
}

}  // namespace detachgb
