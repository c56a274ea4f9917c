#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace detachgb;
using namespace detachgb::testing;

namespace {

ReducerChooser random_chooser(std::mt19937_64& rng) {
  return [&rng](std::span<const std::size_t> eligible) { return eligible[rng() % eligible.size()]; };
}

std::vector<Q> coefficients(const MonoBasis<Q>& M) {
  std::vector<Q> out;
  for (const auto& e : M.elements) out.push_back(e.coeff);
  return out;
}

}  // namespace

TEST(IncompleteStandardForm, Examples) {
  FourVarSystem s;
  auto S = s.sigbasis();
  EXPECT_EQ(incomplete_standard_form(s.P("x*y^3*t - z^4*t"), s.S("x*y*e2"), S), s.P("x*y^3*t - z^4*t"));
  EXPECT_EQ(incomplete_standard_form(s.P("x^2*y*z^2 - x*y^3*t"), s.S("x*y*e2"), S), s.P("-x*y^3*t + z^4*t"));
  EXPECT_TRUE(incomplete_standard_form(Polynomial<Q>(s.ring), s.S("x*y*e2"), S).is_zero());
}

TEST(IncompleteStandardForm, ResultIsStandard) {
  FourVarSystem s;
  auto S = s.sigbasis();
  auto polys = random_system(s.ring, {.n_gens = 40, .max_deg = 7, .max_terms = 4, .seed = 61});
  std::mt19937_64 rng(61);
  for (const auto& f : polys) {
    ModuleMonomial sig = S.elements[rng() % S.elements.size()].sig;
    sig.mono = mono_mul(sig.mono, s.ring->var(rng() % 4, 2));
    ASSERT_TRUE(is_standard_form(incomplete_standard_form(f, sig, S), sig, S));
    ASSERT_TRUE(is_standard_form(incomplete_standard_form(f, sig, S, random_chooser(rng)), sig, S));
  }
}

TEST(Sig2Mono, FourVariableBasis) {
  FourVarSystem s;
  auto M = sig2mono(s.sigbasis());
  ASSERT_EQ(M.elements.size(), 10u);
  // listing order g1..g10
  std::vector<Q> expected = {1, 1, 1, -1, 1, 1, 1, 1, -1, 1};
  EXPECT_EQ(coefficients(M), expected);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(M.elements[i].stamp, i);
    EXPECT_EQ(M.elements[i].sig, s.sigbasis().elements[i].sig);
  }
}

TEST(Sig2Mono, GeneratorsOnly) {
  ThreeVarSystem s;
  SigBasis<Q> S{s.F, {}};
  for (std::size_t j = 0; j < 3; ++j) S.elements.push_back({s.F[j], {s.ring->one_monomial(), j}, j});
  for (const auto& e : sig2mono(S).elements) EXPECT_EQ(e.coeff, 1);
}

TEST(Sig2Mono, RejectsInconsistentInput) {
  auto ring = make_ring<Q>({"x", "y"});
  std::vector<Polynomial<Q>> F = {parse_poly("x", ring), parse_poly("x", ring), parse_poly("x", ring)};
  // y claims signature x*e2, but x*f2 cancels against x * (x with signature e3)
  SigBasis<Q> S{F, {{parse_poly("x", ring), {ring->one_monomial(), 2}, 0},
                    {parse_poly("y", ring), {ring->var(0), 1}, 1}}};
  EXPECT_THROW(sig2mono(S), InconsistentBasis);
  SigBasis<Q> bad{F, {{parse_poly("x", ring), {ring->one_monomial(), 5}, 0}}};
  EXPECT_THROW(sig2mono(bad), ContextError);
}

TEST(Sig2Mono, PathIndependence) {
  FourVarSystem s;
  auto S = s.sigbasis();
  auto reference = coefficients(sig2mono(S));
  std::mt19937_64 rng(71);
  for (int k = 0; k < 20; ++k) ASSERT_EQ(coefficients(sig2mono(S, random_chooser(rng))), reference);
}

TEST(Representation, Examples) {
  FourVarSystem s;
  std::span<const Polynomial<Q>> F(s.F);
  // empty G, g3 = f3
  auto p0 = representation(Q(1), s.S("e3"), s.F[2], std::span<const FullLabeledPoly<Q>>(), F);
  EXPECT_TRUE(p0.empty());
  std::vector<FullLabeledPoly<Q>> G = {{s.F[2], s.V({"0", "0", "1"})}, {s.F[1], s.V({"0", "1", "0"})}};
  auto p = representation(Q(-1), s.S("x*y*e2"), s.P("x*y^3*t - z^4*t"), std::span<const FullLabeledPoly<Q>>(G), F);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], s.P("z^2"));
  EXPECT_TRUE(p[1].is_zero());
  auto trivial = representation(Q(1), s.S("e2"), s.F[1], std::span<const FullLabeledPoly<Q>>(G), F);
  EXPECT_TRUE(trivial[0].is_zero() && trivial[1].is_zero());
  EXPECT_THROW(representation(Q(1), s.S("x*e1"), s.F[1], std::span<const FullLabeledPoly<Q>>(G), F),
               InconsistentBasis);
}

TEST(Mono2Full, FourVariableBasis) {
  FourVarSystem s;
  auto M = sig2mono(s.sigbasis());
  auto G = mono2full(M);
  ASSERT_EQ(G.elements.size(), 10u);
  // processing order g3, g2, g4, g5, g1, g6, ..., g10
  std::vector<std::size_t> order = {2, 1, 3, 4, 0, 5, 6, 7, 8, 9};
  EXPECT_EQ(signature_order(M), order);
  std::vector<std::vector<std::string>> vectors = {
      {"0", "0", "1"},
      {"0", "1", "0"},
      {"0", "-x*y", "z^2"},
      {"0", "x*y*z^2 + y^3*t", "-z^4"},
      {"1", "0", "0"},
      {"x", "-y*z", "0"},
      {"x^2", "0", "-z^3"},
      {"x^2*z", "-x*y*z^2 - y^3*t", "0"},
      {"-x^3 + y*t^2", "z^3*t", "x*z^3 + t^4"},
      {"z^3*t", "-x*y^2*z^2 - y^4*t + x*z*t^3", "y*z^4"},
  };
  for (std::size_t k = 0; k < 10; ++k) {
    const auto& e = G.elements[k];
    const auto& m = M.elements[order[k]];
    EXPECT_EQ(e.poly, m.poly);
    EXPECT_TRUE(is_valid(e, std::span<const Polynomial<Q>>(s.F)));
    EXPECT_EQ(e.vec.lpp(), m.sig);
    EXPECT_EQ(e.vec.lc(), m.coeff);
    EXPECT_EQ(e.vec, s.V(vectors[k])) << "element " << k;
  }
}

TEST(Mono2Full, SingleGenerator) {
  auto ring = make_ring<Q>({"x", "y"});
  std::vector<Polynomial<Q>> F = {parse_poly("x*y - 1", ring)};
  MonoBasis<Q> M{F, {{F[0], Q(1), {ring->one_monomial(), 0}, 0}}};
  auto G = mono2full(M);
  ASSERT_EQ(G.elements.size(), 1u);
  EXPECT_EQ(G.elements[0].vec, ModuleVector<Q>::unit(ring, 1, 0));
}

TEST(Mono2Full, ComposedPipelineIsNeverRefuted) {
  FourVarSystem s;
  auto G = mono2full(sig2mono(s.sigbasis()));
  std::span<const Polynomial<Q>> F(s.F);
  std::mt19937_64 rng(81);
  std::size_t checked = 0;
  while (checked < 1000) {
    auto cofs = random_system(s.ring, {.n_gens = 3, .max_deg = 2, .max_terms = 2, .seed = rng()});
    ModuleVector<Q> u(s.ring, cofs);
    FullLabeledPoly<Q> w{modvec_dot(u, F), u};
    if (w.poly.is_zero()) continue;
    ASSERT_FALSE(refute_full_labeled(G, w).has_value()) << to_string(u);
    ++checked;
  }
}

TEST(Conversions, EngineOutputOnRandomSystems) {
  auto ring = make_ring<Zp>({"x", "y", "z"}, TermOrder::grevlex, FieldSpec::prime(32003));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto F = random_system(ring, {.n_gens = 3, .max_deg = 3, .max_terms = 4, .seed = 300 + seed});
    SignatureEngine<Zp> eng(F, {.instrumented = true, .max_pairs = 0, .on_pair = {}});
    eng.run();
    SigBasis<Zp> S{F, {}};
    std::vector<const ModuleVector<Zp>*> shadows;
    for (const auto& e : eng.elements())
      if (!e.poly.is_zero()) {
        S.elements.push_back({e.poly, e.sig, e.stamp});
        shadows.push_back(&*e.shadow);
      }
    auto M = sig2mono(S);
    // the recovered coefficient is the shadow's leading coefficient
    for (std::size_t i = 0; i < M.elements.size(); ++i) ASSERT_EQ(M.elements[i].coeff, shadows[i]->lc());
    auto G = mono2full(M);
    for (const auto& e : G.elements) ASSERT_TRUE(is_valid(e, std::span<const Polynomial<Zp>>(F)));
  }
}
