#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace detachgb;
using namespace detachgb::testing;

TEST(Prepare, FourVariableSystem) {
  FourVarSystem s;
  auto prep = prepare(s.F);
  EXPECT_EQ(prep.reduced, s.reduced());
  ASSERT_EQ(prep.reps.size(), prep.reduced.size());
  for (std::size_t i = 0; i < prep.reduced.size(); ++i)
    EXPECT_TRUE(verify_representation(prep.reduced[i], prep.reps[i], s.F));
  // y^5*t^2 - x^4*z*t^2 = x^2 z f1 - (x y z^2 + y^3 t) f2
  EXPECT_EQ(prep.reps[6], s.V({"x^2*z", "-x*y*z^2 - y^3*t", "0"}));
}

TEST(Prepare, CoordinateIdeal) {
  auto ring = make_ring<Q>({"x", "y"});
  std::vector<Polynomial<Q>> F = {parse_poly("x", ring), parse_poly("y", ring)};
  auto prep = prepare(F);
  EXPECT_EQ(prep.reduced, (std::vector<Polynomial<Q>>{parse_poly("y", ring), parse_poly("x", ring)}));
  EXPECT_EQ(prep.reps[0], ModuleVector<Q>::unit(ring, 2, 1));
  EXPECT_EQ(prep.reps[1], ModuleVector<Q>::unit(ring, 2, 0));
}

TEST(Prepare, ThreeVariableSystemAgreesWithOracle) {
  ThreeVarSystem s;
  auto prep = prepare(s.F);
  EXPECT_EQ(prep.reduced, interreduce(buchberger_with_cofactors(s.F).polys()));
  for (std::size_t i = 0; i < prep.reduced.size(); ++i)
    EXPECT_TRUE(verify_representation(prep.reduced[i], prep.reps[i], s.F));
}

TEST(Prepare, UnitIdeal) {
  auto ring = make_ring<Q>({"x", "y"});
  std::vector<Polynomial<Q>> F = {parse_poly("x*y - 1", ring), parse_poly("x", ring)};
  auto prep = prepare(F);
  ASSERT_EQ(prep.reduced.size(), 1u);
  EXPECT_EQ(prep.reduced[0], parse_poly("1", ring));
  EXPECT_TRUE(verify_representation(prep.reduced[0], prep.reps[0], F));
  auto r = detach(parse_poly("x^3 + 7*y", ring), prep);
  EXPECT_TRUE(r.member);
}

TEST(Detach, FourVariableQueries) {
  FourVarSystem s;
  auto prep = prepare(s.F);
  auto out = detach(s.P("x*z^6*t - x^5*z*t^2 + x"), prep);
  EXPECT_FALSE(out.member);
  EXPECT_EQ(out.remainder, s.P("x"));
  EXPECT_FALSE(out.cofactors.has_value());

  auto f = s.P("x^6*y*t^2 - x*y*z^2*t^5 - x*z^6*t + x^5*z*t^2");
  auto in = detach(f, prep);
  ASSERT_TRUE(in.member);
  EXPECT_TRUE(in.remainder.is_zero());
  EXPECT_TRUE(verify_representation(f, *in.cofactors, s.F));

  auto zero = detach(Polynomial<Q>(s.ring), prep);
  EXPECT_TRUE(zero.member);
  EXPECT_TRUE(zero.cofactors->is_zero());
}

TEST(VerifyRepresentation, KnownCertificate) {
  FourVarSystem s;
  auto f = s.P("x^6*y*t^2 - x*y*z^2*t^5 - x*z^6*t + x^5*z*t^2");
  auto u = s.V({"-x^4*y + x*y^2*t^2 - x^3*z", "x*y*z^3*t", "x^2*y*z^3 + x*y*t^4 + x*z^4"});
  EXPECT_TRUE(verify_representation(f, u, s.F));
  EXPECT_TRUE(verify_representation(s.F[0], ModuleVector<Q>::unit(s.ring, 3, 0), s.F));
  EXPECT_FALSE(verify_representation(s.F[0], ModuleVector<Q>::unit(s.ring, 2, 0), s.F));
}

TEST(VerifyRepresentation, MutationsAreCaught) {
  FourVarSystem s;
  auto f = s.P("x^6*y*t^2 - x*y*z^2*t^5 - x*z^6*t + x^5*z*t^2");
  auto u = *detach(f, prepare(s.F)).cofactors;
  for (std::size_t j = 0; j < u.rank(); ++j)
    for (std::size_t k = 0; k < u[j].size(); ++k) {
      auto terms = u[j].terms();
      terms[k].coeff += 1;
      auto comps = u.components();
      comps[j] = Polynomial<Q>(s.ring, terms);
      ASSERT_FALSE(verify_representation(f, ModuleVector<Q>(s.ring, comps), s.F));
    }
}

TEST(Detach, CompletenessOnRandomCombinations) {
  auto ring = make_ring<Zp>({"x", "y", "z"}, TermOrder::grevlex, FieldSpec::prime(32003));
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto F = random_system(ring, {.n_gens = 3, .max_deg = 2, .max_terms = 3, .seed = 400 + seed});
    auto prep = prepare(F);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 10; ++k) {
      auto cofs = random_system(ring, {.n_gens = 3, .max_deg = 2, .max_terms = 3, .seed = rng()});
      auto f = modvec_dot(ModuleVector<Zp>(ring, cofs), F);
      auto r = detach(f, prep);
      ASSERT_TRUE(r.member);
      ASSERT_TRUE(verify_representation(f, *r.cofactors, F));

      // adding a nonzero normal form pushes f outside the ideal
      auto probe = random_system(ring, {.n_gens = 1, .max_deg = 3, .max_terms = 3, .seed = rng()})[0];
      auto nf = normal_form(probe, prep.reduced);
      if (nf.is_zero()) continue;
      auto miss = detach(f + nf, prep);
      ASSERT_FALSE(miss.member);
      ASSERT_EQ(miss.remainder, nf);
    }
  }
}

TEST(Detach, AgreesWithOracleMembership) {
  auto ring = make_ring<Q>({"x", "y", "z"});
  auto F = random_system(ring, {.n_gens = 3, .max_deg = 2, .max_terms = 3, .seed = 500});
  auto prep = prepare(F);
  auto oracle = buchberger_with_cofactors(F).polys();
  auto queries = random_system(ring, {.n_gens = 100, .max_deg = 3, .max_terms = 3, .seed = 501});
  for (std::size_t k = 0; k < queries.size(); ++k) {
    // half of the queries are forced into the ideal
    auto f = k % 2 ? queries[k] : queries[k] * F[k % 3];
    auto r = detach(f, prep);
    ASSERT_EQ(r.member, normal_form(f, oracle).is_zero());
    if (r.member) {
      ASSERT_TRUE(verify_representation(f, *r.cofactors, F));
    }
  }
}

TEST(Detach, RepeatableAndReadOnly) {
  FourVarSystem s;
  const auto prep = prepare(s.F);
  auto f = s.P("x^6*y*t^2 - x*y*z^2*t^5 - x*z^6*t + x^5*z*t^2");
  auto a = detach(f, prep);
  auto b = detach(f, prep);
  EXPECT_EQ(*a.cofactors, *b.cofactors);
}
