#pragma once

// Ideal membership with certificates. prepare() runs the signature engine,
// lifts its output to a full-labeled basis and expresses every element of the
// reduced Groebner basis over the original generators. detach() then divides
// by the reduced basis and composes the quotients through those vectors, so
// cofactors are always reported against the input generators.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "detachgb/conversions.hpp"
#include "detachgb/reduction.hpp"
#include "detachgb/sig_engine.hpp"

namespace detachgb {

/// u . F == f exactly; false on rank mismatch.
template <FieldElement C>
bool verify_representation(const Polynomial<C>& f, const ModuleVector<C>& u,
                           std::span<const Polynomial<C>> gens) {
  if (u.rank() != gens.size()) return false;
  return modvec_dot(u, gens) == f;
}

template <FieldElement C>
bool verify_representation(const Polynomial<C>& f, const ModuleVector<C>& u,
                           const std::vector<Polynomial<C>>& gens) {
  return verify_representation(f, u, std::span<const Polynomial<C>>(gens));
}

template <FieldElement C>
struct GBWithReps {
  std::vector<Polynomial<C>> generators;
  SigBasis<C> signature_basis;
  MonoBasis<C> monomial_basis;
  FullBasis<C> full_basis;
  /// Reduced Groebner basis, ascending by lpp.
  std::vector<Polynomial<C>> reduced;
  /// reduced[i] = reps[i] . generators
  std::vector<ModuleVector<C>> reps;
};

template <FieldElement C>
struct DetachResult {
  bool member = false;
  /// Zero iff member.
  Polynomial<C> remainder;
  /// Present iff member; cofactors . F = f.
  std::optional<ModuleVector<C>> cofactors;
};

/// Expresses f over the full-labeled basis by division: f = sum q_i g_i,
/// hence f = (sum q_i v_i) . F. Returns nullopt if the remainder is nonzero.
template <FieldElement C>
std::optional<ModuleVector<C>> lift_through(const Polynomial<C>& f, const FullBasis<C>& G) {
  std::vector<Polynomial<C>> polys;
  for (const auto& e : G.elements) polys.push_back(e.poly);
  auto div = divide(f, polys);
  if (!div.remainder.is_zero()) return std::nullopt;
  ModuleVector<C> u(G.ring(), G.rank());
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (!div.quotients[i].is_zero()) u = u.add_mul(div.quotients[i], G.elements[i].vec);
  return u;
}

template <FieldElement C>
GBWithReps<C> prepare(const std::vector<Polynomial<C>>& gens, EngineOptions options = {}) {
  GBWithReps<C> out;
  out.generators = gens;
  out.signature_basis = f5_run(gens, std::move(options));

  // Zero elements only matter to the engine's Rewritten criterion; they cover
  // nothing, so the nonzero part is still a signature-labeled basis.
  SigBasis<C> nonzero{gens, {}};
  for (const auto& e : out.signature_basis.elements)
    if (!e.poly.is_zero()) nonzero.elements.push_back(e);

  out.monomial_basis = sig2mono(nonzero);
  out.full_basis = mono2full(out.monomial_basis);
  for (const auto& e : out.full_basis.elements)
    if (!verify_representation(e.poly, e.vec, gens))
      throw std::logic_error("full-labeled element fails poly = vec . F");

  std::vector<Polynomial<C>> polys;
  for (const auto& e : out.full_basis.elements) polys.push_back(e.poly);
  out.reduced = interreduce(polys);
  for (const auto& r : out.reduced) {
    auto u = lift_through(r, out.full_basis);
    if (!u) throw InconsistentBasis("reduced basis element outside the computed ideal");
    if (!verify_representation(r, *u, gens))
      throw std::logic_error("reduced basis representation fails verification");
    out.reps.push_back(std::move(*u));
  }
  return out;
}

template <FieldElement C>
DetachResult<C> detach(const Polynomial<C>& f, const GBWithReps<C>& prep) {
  const auto& ring = prep.generators.front().ring();
  DetachResult<C> res;
  auto div = divide(f, prep.reduced);
  res.remainder = div.remainder;
  if (!div.remainder.is_zero()) return res;
  res.member = true;
  ModuleVector<C> u(ring, prep.generators.size());
  for (std::size_t i = 0; i < prep.reduced.size(); ++i)
    if (!div.quotients[i].is_zero()) u = u.add_mul(div.quotients[i], prep.reps[i]);
  if (!verify_representation(f, u, prep.generators))
    throw std::logic_error("detach produced an invalid certificate");
  res.cofactors = std::move(u);
  return res;
}

}  // namespace detachgb
