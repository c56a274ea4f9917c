#pragma once

// Labeled polynomials at three levels of detail:
//   f^[u]    full     polynomial and its whole cofactor vector, f = u . F
//   g^{c t}  monomial polynomial and the leading monomial c*t of a hidden vector
//   g^(t)    signature polynomial and the leading power product t only

#include <optional>
#include <span>
#include <vector>

#include "detachgb/module.hpp"

namespace detachgb {

template <FieldElement C>
struct FullLabeledPoly {
  Polynomial<C> poly;
  ModuleVector<C> vec;

  friend bool operator==(const FullLabeledPoly&, const FullLabeledPoly&) = default;
};

template <FieldElement C>
struct MonoLabeledPoly {
  Polynomial<C> poly;
  C coeff;
  ModuleMonomial sig;
  std::size_t stamp = 0;

  friend bool operator==(const MonoLabeledPoly&, const MonoLabeledPoly&) = default;
};

template <FieldElement C>
struct SigLabeledPoly {
  Polynomial<C> poly;
  ModuleMonomial sig;
  std::size_t stamp = 0;

  friend bool operator==(const SigLabeledPoly&, const SigLabeledPoly&) = default;
};

/// A labeled set together with the generators F it is labeled against.
/// Element order is the insertion order.
template <class Element, FieldElement C>
struct LabeledBasis {
  std::vector<Polynomial<C>> generators;
  std::vector<Element> elements;

  std::size_t rank() const { return generators.size(); }
  const RingPtr<C>& ring() const { return generators.front().ring(); }
};

template <FieldElement C>
using SigBasis = LabeledBasis<SigLabeledPoly<C>, C>;
template <FieldElement C>
using MonoBasis = LabeledBasis<MonoLabeledPoly<C>, C>;
template <FieldElement C>
using FullBasis = LabeledBasis<FullLabeledPoly<C>, C>;

/// f_j^[e_j]
template <FieldElement C>
FullLabeledPoly<C> generator_element(std::span<const Polynomial<C>> gens, std::size_t j) {
  return {gens[j], ModuleVector<C>::unit(gens[j].ring(), gens.size(), j)};
}

template <FieldElement C>
FullLabeledPoly<C> labeled_add(const FullLabeledPoly<C>& a, const FullLabeledPoly<C>& b) {
  return {a.poly + b.poly, a.vec + b.vec};
}

/// c t (f^[u]) = (c t f)^[c t u]
template <FieldElement C>
FullLabeledPoly<C> labeled_scale(const C& c, const Monomial& t, const FullLabeledPoly<C>& a) {
  if (is_zero(c)) throw std::domain_error("labeled_scale by zero");
  return {a.poly.scale_term(c, t), a.vec.scale_term(c, t)};
}

/// Signature lpp(u); undefined for the zero vector.
template <FieldElement C>
ModuleMonomial signature(const FullLabeledPoly<C>& a) {
  if (a.vec.is_zero()) throw std::domain_error("signature of a labeled polynomial with zero vector");
  return a.vec.lpp();
}

/// poly = vec . F exactly.
template <FieldElement C>
bool is_valid(const FullLabeledPoly<C>& a, std::span<const Polynomial<C>> gens) {
  return a.vec.rank() == gens.size() && modvec_dot(a.vec, gens) == a.poly;
}

/// Whether g with signature `sig` is a standard form with respect to the
/// signature-labeled basis S: g = 0, or no element g_i^(t_i) of S has
/// lpp(g_i) | lpp(g) with (lpp(g)/lpp(g_i)) t_i < sig.
template <FieldElement C>
bool is_standard_form(const Polynomial<C>& g, const ModuleMonomial& sig, const SigBasis<C>& S) {
  if (g.is_zero()) return true;
  const TermOrder order = g.ring()->order();
  for (const auto& e : S.elements) {
    if (e.poly.is_zero() || !mono_divides(e.poly.lpp(), g.lpp())) continue;
    Monomial t = mono_div(g.lpp(), e.poly.lpp());
    if (module_cmp(mono_mul(t, e.sig), sig, order) < 0) return false;
  }
  return true;
}

/// Why a witness is not covered by a labeled set.
struct FullLabeledViolation {
  Monomial witness_lpp;
  ModuleMonomial witness_sig;
  /// Indices of elements whose lpp divides the witness lpp but whose scaled
  /// signature exceeds the witness signature.
  std::vector<std::size_t> dividing_but_too_large;
};

/// Checks one witness f^[u] against the definition of a full-labeled Groebner
/// basis: some g^[v] in G must have lpp(g) | lpp(f) and lpp(t v) <= lpp(u),
/// t = lpp(f)/lpp(g). Returns the violation if none does.
///
/// This can only falsify: the definition quantifies over all of I.
template <FieldElement C>
std::optional<FullLabeledViolation> refute_full_labeled(const FullBasis<C>& G,
                                                        const FullLabeledPoly<C>& witness) {
  if (witness.poly.is_zero()) throw std::invalid_argument("witness polynomial must be nonzero");
  if (!is_valid(witness, std::span<const Polynomial<C>>(G.generators)))
    throw std::invalid_argument("witness does not satisfy poly = vec . F");
  const TermOrder order = witness.poly.ring()->order();
  const ModuleMonomial wsig = witness.vec.lpp();
  FullLabeledViolation v{witness.poly.lpp(), wsig, {}};
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    const auto& g = G.elements[i];
    if (g.poly.is_zero() || !mono_divides(g.poly.lpp(), witness.poly.lpp())) continue;
    Monomial t = mono_div(witness.poly.lpp(), g.poly.lpp());
    if (g.vec.is_zero()) return std::nullopt;  // lpp(0) lies below every term
    if (module_cmp(mono_mul(t, g.vec.lpp()), wsig, order) <= 0) return std::nullopt;
    v.dividing_but_too_large.push_back(i);
  }
  return v;
}

}  // namespace detachgb
