#include <doctest.h>

#include "phant/purity.hpp"
#include "phant/rep_a2.hpp"
#include "phant/verify/random.hpp"
#include "test_support.hpp"

using namespace phant;
using phant::testing::mod;
using phant::testing::morph;

TEST_CASE("in_ideal_class examples") {
  const Ring r4(4);
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  CHECK(in_ideal_class(MorphismIdeal::phantom(r4), RepA2(morph(z4, z2, {{1}}))));
  CHECK(in_ideal_class(MorphismIdeal::phantom(r4), RepA2(morph(z4, z4, {{2}}))));
  for (const auto& ideal : {MorphismIdeal::zero(r4), MorphismIdeal::phantom(r4), MorphismIdeal::hom(r4),
                            MorphismIdeal::generated(r4, {})})
    CHECK(in_ideal_class(ideal, RepA2::zero(r4)));
  CHECK_FALSE(in_ideal_class(MorphismIdeal::phantom(r4), RepA2(ModuleMorphism::identity(z2))));
}

TEST_CASE("rep morphisms check the square") {
  const auto z4 = mod(4, {4});
  const auto z2 = mod(4, {2});
  const RepA2 f(morph(z4, z2, {{1}}));
  const RepA2 g(ModuleMorphism::identity(z2));
  CHECK_NOTHROW(RepMorphism(f, g, morph(z4, z2, {{1}}), ModuleMorphism::identity(z2)));
  CHECK_THROWS_AS(RepMorphism(f, g, ModuleMorphism::zero(z4, z2), ModuleMorphism::identity(z2)), InputError);
  CHECK(f.cardinality() == 6);
}

TEST_CASE("is_pure_subrep examples") {
  const auto z4 = mod(4, {4});
  const RepA2 f(morph(z4, z4, {{2}}));
  CHECK(is_pure_subrep(SubRep::whole(f)));
  CHECK(is_pure_subrep(SubRep::zero(f)));
  CHECK_FALSE(is_pure_subrep(SubRep(f, Submodule(z4, {{2}}), Submodule::whole(z4))));
  CHECK_THROWS_AS(SubRep(f, Submodule::whole(z4), Submodule::zero(z4)), InputError);
}

TEST_CASE("quotient_rep examples") {
  const auto z4 = mod(4, {4});
  const RepA2 f(morph(z4, z4, {{2}}));
  const auto same = quotient_rep(SubRep::zero(f));
  CHECK(same.rep == f);
  CHECK(quotient_rep(SubRep::whole(f)).rep.is_zero());
  const auto q = quotient_rep(SubRep(f, Submodule(z4, {{2}}), Submodule(z4, {{2}})));
  CHECK(q.rep.m1() == mod(4, {2}));
  CHECK(q.rep.m2() == mod(4, {2}));
  CHECK(q.rep.map().is_zero());
}

TEST_CASE("rep_colimit examples") {
  const auto z4 = mod(4, {4});
  const RepA2 f(morph(z4, z4, {{2}}));
  const auto id = RepMorphism::identity(f);
  CHECK(rep_colimit({f}, {}).rep == f);
  CHECK(rep_colimit({f, f, f}, {{0, 1, id}, {1, 2, id}}).rep == f);

  // chain of subreps ending at the whole representation
  const auto s0 = restrict(SubRep::zero(f));
  const auto s1 = restrict(SubRep(f, Submodule::zero(z4), Submodule(z4, {{2}})));
  const auto s2 = restrict(SubRep::whole(f));
  const auto c = rep_colimit({s0.rep, s1.rep, s2.rep},
                             {{0, 1, subrep_inclusion(s0, s1)}, {1, 2, subrep_inclusion(s1, s2)}});
  CHECK(c.rep == f);
  CHECK(is_isomorphism(c.structural[2].first()));
  CHECK(is_isomorphism(c.structural[2].second()));

  // two-step chain of phantom reps stays phantom
  const auto z2 = mod(4, {2});
  const RepA2 p0(morph(z4, z2, {{1}}));
  const RepA2 p1(morph(mod(4, {4, 4}), z2, {{1, 0}}));
  const RepMorphism step(p0, p1, morph(z4, mod(4, {4, 4}), {{1}, {0}}), ModuleMorphism::identity(z2));
  const auto pc = rep_colimit({p0, p1}, {{0, 1, step}});
  CHECK(in_ideal_class(MorphismIdeal::phantom(Ring(4)), pc.rep));
}

TEST_CASE("extension counterexample examples") {
  const Ring r4(4);
  const auto z2 = mod(4, {2});
  const auto ex = extension_counterexample(MorphismIdeal::phantom(r4), ModuleMorphism::identity(z2));
  CHECK(ex.middle.map().matrix() == ResidueMatrix{{0, 1}, {0, 0}});
  CHECK_FALSE(ex.middle_in_ideal);
  CHECK(ex.sub_in_ideal);
  CHECK(ex.quotient_in_ideal);
  CHECK(ex.sub_rep.rep.map().is_zero());
  CHECK(ex.quotient.rep.map().is_zero());
  CHECK(ex.sub_rep.rep.m1() == z2);
  CHECK(ex.quotient.rep.m2() == z2);

  const auto z4 = mod(4, {4});
  const auto zex = extension_counterexample(MorphismIdeal::zero(r4), morph(z4, z4, {{2}}));
  CHECK_FALSE(zex.middle_in_ideal);
  CHECK_FALSE(zex.middle.map().is_zero());
  CHECK_THROWS_AS((void)extension_counterexample(MorphismIdeal::hom(r4), ModuleMorphism::identity(z2)), InputError);
  CHECK_THROWS_AS((void)extension_counterexample(MorphismIdeal::phantom(r4), morph(z4, z4, {{2}})), InputError);
}

TEST_CASE("property: extension counterexample for random non-phantoms") {
  rnd::Rng rng(41);
  int found = 0;
  for (std::int64_t n : {4, 8, 9, 12}) {
    const Ring ring(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = rnd::nonzero_module(rng, ring, 64, 2);
      const auto b = rnd::nonzero_module(rng, ring, 64, 2);
      const auto f = rnd::non_phantom_morphism(rng, a, b);
      if (is_phantom(f)) continue;
      ++found;
      const auto ex = extension_counterexample(MorphismIdeal::phantom(ring), f);
      CHECK_FALSE(ex.middle_in_ideal);
      CHECK(ex.sub_in_ideal);
      CHECK(ex.quotient_in_ideal);
      // the sequence is exact: |middle| components are products of sub and quotient
      CHECK(ex.middle.m1().cardinality() == ex.sub_rep.rep.m1().cardinality() * ex.quotient.rep.m1().cardinality());
      CHECK(ex.middle.m2().cardinality() == ex.sub_rep.rep.m2().cardinality() * ex.quotient.rep.m2().cardinality());
    }
  }
  CHECK(found > 20);
}

TEST_CASE("property: rep morphism composition is associative") {
  rnd::Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{4, 6, 12}));
    const auto m = rnd::module(rng, ring, 32, 2);
    const RepA2 f(rnd::morphism(rng, m, m));
    // endomorphisms (f^k, f^k) commute with f
    const RepMorphism a(f, f, f.map(), f.map());
    const auto k = ModuleMorphism::identity(m) + f.map();
    const RepMorphism b(f, f, k, k);
    const RepMorphism c(f, f, compose(k, k), compose(k, k));
    CHECK(compose(compose(c, b), a) == compose(c, compose(b, a)));
  }
}

TEST_CASE("property: quotient and restriction sizes multiply to the ambient") {
  rnd::Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{4, 6, 8, 12}));
    const auto a = rnd::module(rng, ring, 64, 2);
    const auto b = rnd::module(rng, ring, 64, 2);
    const RepA2 f(rnd::morphism(rng, a, b));
    const auto s1 = rnd::submodule(rng, a);
    const SubRep s(f, s1, image(f.map(), s1).plus(rnd::submodule(rng, b)));
    const auto r = restrict(s);
    const auto q = quotient_rep(s);
    CHECK(r.rep.m1().cardinality() * q.rep.m1().cardinality() == a.cardinality());
    CHECK(r.rep.m2().cardinality() * q.rep.m2().cardinality() == b.cardinality());
    CHECK(compose(q.projection, r.inclusion).first().is_zero());
    if (is_pure_subrep(s) && in_ideal_class(MorphismIdeal::phantom(ring), f)) {
      CHECK(in_ideal_class(MorphismIdeal::phantom(ring), q.rep));
      CHECK(in_ideal_class(MorphismIdeal::phantom(ring), r.rep));
    }
  }
}
