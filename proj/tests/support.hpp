#pragma once

// Shared fixtures for the unit and acceptance suites.

#include <string>
#include <vector>

#include "detachgb/detachgb.hpp"

namespace detachgb::testing {

using Q = Rational;

inline std::string fixture(const std::string& name) { return std::string(DETACHGB_FIXTURE_DIR) + "/" + name; }

/// Q[x,y,z,t], grevlex, with the three-generator system used throughout.
struct FourVarSystem {
  RingPtr<Q> ring = make_ring<Q>({"x", "y", "z", "t"}, TermOrder::grevlex);
  std::vector<Polynomial<Q>> F = {P("y*z^3 - x^2*t^2"), P("x*z^2 - y^2*t"), P("x^2*y - z^2*t")};

  Polynomial<Q> P(const std::string& s) const { return parse_poly(s, ring); }
  ModuleMonomial S(const std::string& s) const { return parse_module_monomial(s, ring, 3); }
  ModuleVector<Q> V(const std::vector<std::string>& comps) const {
    std::vector<Polynomial<Q>> polys;
    for (const auto& c : comps) polys.push_back(P(c));
    return ModuleVector<Q>(ring, std::move(polys));
  }

  /// Signature-labeled basis g1..g10 from the fixture file.
  SigBasis<Q> sigbasis() const { return load_system(fixture("three_generators_sigbasis.sys")).signature_basis(ring); }

  /// Reduced Groebner basis, ascending by leading power product.
  std::vector<Polynomial<Q>> reduced() const {
    std::vector<Polynomial<Q>> out;
    for (const char* s : {"x*z^2 - y^2*t", "x^2*y - z^2*t", "y*z^3 - x^2*t^2", "y^3*z*t - x^3*t^2",
                          "x*y^3*t - z^4*t", "z^5*t - x^4*t^2", "y^5*t^2 - x^4*z*t^2", "x^5*t^2 - z^2*t^5"})
      out.push_back(P(s));
    return out;
  }
};

/// Q[x,y,z], grevlex: F = (xz - y, y^2 + xz, 2xy + 2x), itself a Groebner basis.
struct ThreeVarSystem {
  RingPtr<Q> ring = make_ring<Q>({"x", "y", "z"}, TermOrder::grevlex);
  std::vector<Polynomial<Q>> F = {P("x*z - y"), P("y^2 + x*z"), P("2*x*y + 2*x")};

  Polynomial<Q> P(const std::string& s) const { return parse_poly(s, ring); }
  FullBasis<Q> trivial_labels() const {
    FullBasis<Q> G{F, {}};
    for (std::size_t j = 0; j < F.size(); ++j)
      G.elements.push_back(generator_element(std::span<const Polynomial<Q>>(F), j));
    return G;
  }
  /// 2x (f2^[e2]) - y (f3^[e3])
  FullLabeledPoly<Q> witness() const {
    auto G = trivial_labels();
    return labeled_add(labeled_scale(ring->coeff(2), ring->var(0), G.elements[1]),
                       labeled_scale(ring->coeff(-1), ring->var(1), G.elements[2]));
  }
};

}  // namespace detachgb::testing
