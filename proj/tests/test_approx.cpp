#include <doctest.h>

#include "phant/approx.hpp"
#include "phant/purity.hpp"
#include "phant/verify/oracle.hpp"
#include "phant/verify/random.hpp"
#include "test_support.hpp"

using namespace phant;
using phant::testing::mod;
using phant::testing::morph;

namespace {

// Both directions of lifting between two maps onto M are isomorphisms.
bool isomorphic_over(const ModuleMorphism& a, const ModuleMorphism& b) {
  const auto x = lift(a, b);
  const auto y = lift(b, a);
  return x && y && is_isomorphism(*x) && is_isomorphism(*y);
}

}  // namespace

TEST_CASE("is_precover examples") {
  const Ring r4(4);
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  const auto phi = morph(z4, z2, {{1}});
  const auto phantom = MorphismIdeal::phantom(r4);
  const std::vector<ModuleMorphism> self{phi};
  CHECK(is_precover(phantom, phi, self).precover);
  const std::vector<ModuleMorphism> zero{ModuleMorphism::zero(z4, z2)};
  CHECK(is_precover(phantom, phi, zero).precover);
  const auto probes = phantom_probes(z2, 16);
  CHECK_FALSE(probes.empty());
  CHECK(is_precover(phantom, phi, probes).precover);
  // the zero map is in the ideal but misses the probes
  const auto zero_phi = ModuleMorphism::zero(z4, z2);
  const auto bad = is_precover(phantom, zero_phi, probes);
  CHECK_FALSE(bad.precover);
  REQUIRE(bad.failing_probe.has_value());
  CHECK_FALSE(probes[*bad.failing_probe].is_zero());
  // probes must lie in the ideal
  const std::vector<ModuleMorphism> outside{ModuleMorphism::identity(z2)};
  CHECK_THROWS_AS((void)is_precover(phantom, phi, outside), InputError);
  CHECK_THROWS_AS((void)is_precover(phantom, ModuleMorphism::identity(z2), self), InputError);
}

TEST_CASE("phantom probes are phantom and cover every phantom element of small Hom groups") {
  for (std::int64_t n : {4, 6, 8}) {
    const Ring ring(n);
    for (const auto& m : enumerate_modules(ring, 16)) {
      const auto probes = phantom_probes(m, 16);
      for (const auto& p : probes) {
        CHECK(p.target() == m);
        CHECK(factors_through_projective(p).has_value());
      }
      // each phantom element of Hom(L, M) is in the span of the probes from L
      for (const auto& l : enumerate_modules(ring, 16)) {
        if (hom_order(l, m) > 256) continue;
        std::vector<ModuleMorphism> from_l;
        for (const auto& p : probes)
          if (p.source() == l) from_l.push_back(p);
        const auto span = oracle::morphism_span(from_l, l, m);
        for (const auto& h : hom_elements(l, m, 256))
          if (is_phantom(h)) CHECK(span.count(oracle::flatten(h)) == 1);
      }
    }
  }
}

TEST_CASE("is_cover examples") {
  const Ring r4(4);
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  const auto phantom = MorphismIdeal::phantom(r4);
  const auto hom = MorphismIdeal::hom(r4);
  const std::vector<ModuleMorphism> none;
  CHECK(is_cover(hom, ModuleMorphism::identity(z2), none).verdict == CoverVerdict::Cover);

  const auto probes = phantom_probes(z2, 16);
  const auto proj = morph(z4, z2, {{1}});
  const auto c = is_cover(phantom, proj, probes);
  CHECK(c.verdict == CoverVerdict::Cover);
  CHECK(c.route == CoverRoute::Enumeration);
  CHECK(c.enumerated == 2);

  const auto wide = morph(mod(4, {4, 4}), z2, {{1, 0}});
  CHECK(is_precover(phantom, wide, probes).precover);
  const auto nc = is_cover(phantom, wide, probes);
  CHECK(nc.verdict == CoverVerdict::NotCover);
  REQUIRE(nc.witness.has_value());
  CHECK(compose(wide, *nc.witness) == wide);
  CHECK_FALSE(is_injective(*nc.witness));

  CHECK(is_cover(phantom, ModuleMorphism::zero(z4, z2), probes).verdict == CoverVerdict::NotPrecover);
}

TEST_CASE("property: automorphism test agrees with injectivity") {
  rnd::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{2, 3, 4, 6, 8, 9, 12, 36}));
    const auto m = rnd::module(rng, ring, 256, 3);
    auto j = rnd::morphism(rng, m, m);
    if (trial % 3 == 0) {
      std::int64_t rad = 1;
      for (const auto& pp : ring.factorization()) rad *= pp.prime;
      j = ModuleMorphism::identity(m) + rad * compose(j, j);
    }
    CHECK(is_automorphism(j) == is_injective(j));
    CHECK(is_automorphism(j) == oracle::bijective_by_elements(j));
  }
}

TEST_CASE("property: cover routes agree with enumeration") {
  rnd::Rng rng(53);
  int split = 0;
  int radical = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{2, 4, 6, 8, 9, 12}));
    const auto m = rnd::module(rng, ring, 32, 2);
    const auto p = rnd::projective_module(rng, ring, 144, 2);
    const auto phi = rnd::morphism(rng, p, m);
    const auto full = self_factorizations(phi, CoverOptions{1u << 20});
    REQUIRE(full.route == CoverRoute::Enumeration);
    const auto fast = self_factorizations(phi, CoverOptions{0});
    CHECK(fast.verdict == full.verdict);
    if (fast.route == CoverRoute::SplitOff) ++split;
    if (fast.route == CoverRoute::Radical) ++radical;
    if (fast.witness) {
      CHECK(compose(phi, *fast.witness) == phi);
      CHECK_FALSE(is_injective(*fast.witness));
    }
  }
  CHECK(split > 10);
  CHECK(radical > 10);
}

TEST_CASE("projective_cover examples") {
  const auto z4 = mod(4, {4});
  CHECK(projective_cover(z4) == ModuleMorphism::identity(z4));
  const auto c = projective_cover(mod(4, {2}));
  CHECK(c.source() == z4);
  CHECK(c.matrix() == ResidueMatrix{{1}});
  const auto m = canonical_module(Ring(12), {2, 3});
  CHECK(m == mod(12, {6}));
  const auto c12 = projective_cover(m);
  CHECK(c12.source() == mod(12, {12}));
  CHECK(is_surjective(c12));
  const auto zero = FiniteModule::zero(Ring(6));
  CHECK(projective_cover(zero).source().is_zero());
}

TEST_CASE("phantom_cover examples") {
  const Ring r4(4);
  const auto z4 = mod(4, {4});
  CHECK(phantom_cover(z4) == ModuleMorphism::identity(z4));
  CHECK(phantom_cover(mod(4, {4, 4})) == ModuleMorphism::identity(mod(4, {4, 4})));
  const auto c = phantom_cover(mod(4, {2}));
  CHECK(c.source() == z4);
  CHECK(is_surjective(c));
  const auto probes = phantom_probes(mod(4, {2}), 16);
  CHECK(is_cover(MorphismIdeal::phantom(r4), c, probes).verdict == CoverVerdict::Cover);
  const auto zero = FiniteModule::zero(r4);
  const auto z = phantom_cover(zero);
  CHECK(z.source().is_zero());
  CHECK(z.target().is_zero());
}

TEST_CASE("property: phantom cover is a surjective cover isomorphic to the projective cover") {
  for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12}) {
    const Ring ring(n);
    const auto phantom = MorphismIdeal::phantom(ring);
    for (const auto& m : enumerate_modules(ring, 64)) {
      const auto pc = phantom_cover(m);
      const auto proj = projective_cover(m);
      CHECK(is_surjective(pc));
      CHECK(is_projective(pc.source()));
      CHECK(is_phantom(pc));
      CHECK(isomorphic_over(pc, proj));
      CHECK(self_factorizations(pc).verdict == CoverVerdict::Cover);
      CHECK(self_factorizations(proj).verdict == CoverVerdict::Cover);
      if (m.cardinality() <= 16) {
        const auto probes = phantom_probes(m, 32);
        CHECK(is_cover(phantom, pc, probes).verdict == CoverVerdict::Cover);
      }
    }
  }
}

TEST_CASE("pushout_transport examples") {
  const Ring r4(4);
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  const auto phi = morph(z4, z2, {{1}});
  {
    const auto t = pushout_transport(phi, ModuleMorphism::identity(z2));
    CHECK(t.pushout.module == z4);
    CHECK(compose(t.transported, t.pushout.from_u_target) == phi);
    CHECK(is_isomorphism(t.pushout.from_u_target));
  }
  {
    const auto v = morph(z2, mod(4, {2, 2}), {{1}, {0}});
    const auto t = pushout_transport(phi, v);
    CHECK(is_phantom(t.transported));
    CHECK(is_surjective(t.transported));
    CHECK(compose(t.transported, t.pushout.from_v_target).is_zero());
  }
  {
    const auto zero = FiniteModule::zero(r4);
    const auto t = pushout_transport(ModuleMorphism::zero(zero, zero), ModuleMorphism::identity(zero));
    CHECK(t.transported.is_zero());
  }
  CHECK_THROWS_AS((void)pushout_transport(ModuleMorphism::zero(z4, z2), ModuleMorphism::identity(z4)), InputError);
  // {0,2} inside Z/4 is not pure
  CHECK_THROWS_AS((void)pushout_transport(phi, morph(z2, z4, {{2}})), InputError);
}

TEST_CASE("extract_retract examples") {
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  const auto phi = morph(z4, z2, {{1}});
  const auto same = extract_retract(phi, ModuleMorphism::identity(z2));
  CHECK(same.retraction == ModuleMorphism::identity(z2));
  const auto v = morph(z2, mod(4, {2, 4}), {{1}, {0}});
  const auto r = extract_retract(phi, v);
  CHECK(compose(r.retraction, v) == ModuleMorphism::identity(z2));
  const auto zero = FiniteModule::zero(Ring(4));
  const auto rz = extract_retract(ModuleMorphism::identity(z4), ModuleMorphism::identity(zero));
  CHECK(rz.retraction.is_zero());
  // a precover that is not a cover is refused
  CHECK_THROWS_AS((void)extract_retract(morph(mod(4, {4, 4}), z2, {{1, 0}}),
                                        ModuleMorphism::identity(kernel(morph(mod(4, {4, 4}), z2, {{1, 0}})).module)),
                  InputError);
}

TEST_CASE("property: pushout transport and retract extraction on random pure monos") {
  rnd::Rng rng(57);
  for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12}) {
    const Ring ring(n);
    for (int trial = 0; trial < 12; ++trial) {
      const auto m = rnd::module(rng, ring, 64, 3);
      const auto phi = phantom_cover(m);
      const auto k = kernel(phi).module;
      const auto extra = rnd::module(rng, ring, 256 / std::max<std::uint64_t>(k.cardinality(), 1), 2);
      const auto sum = direct_sum({k, extra});
      // a pure mono: the first injection twisted by a random map into the complement
      const auto v = sum.injections[0] + compose(sum.injections[1], rnd::morphism(rng, k, extra));
      REQUIRE(is_pure_submodule(Submodule::image_of(v), sum.module));
      const auto t = pushout_transport(phi, v);
      CHECK(is_phantom(t.transported));
      const auto r = extract_retract(phi, v);
      CHECK(compose(r.retraction, v) == ModuleMorphism::identity(k));
    }
  }
}
