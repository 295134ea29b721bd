#include <doctest.h>

#include <set>

#include "phant/purity.hpp"
#include "phant/verify/oracle.hpp"
#include "phant/verify/random.hpp"
#include "test_support.hpp"

using namespace phant;
using phant::testing::mod;
using phant::testing::morph;

TEST_CASE("modules validate invariant factors") {
  CHECK_THROWS_AS(mod(4, {3}), InputError);
  CHECK_THROWS_AS(mod(12, {4, 6}), InputError);
  CHECK_THROWS_AS(mod(4, {1}), InputError);
  CHECK_THROWS_AS(Ring(1), InputError);
  CHECK(mod(12, {2, 6}).cardinality() == 12);
  CHECK(FiniteModule::zero(Ring(5)).cardinality() == 1);
  CHECK(canonical_module(Ring(12), {4, 3}) == mod(12, {12}));
  CHECK(canonical_module(Ring(12), {2, 4, 3}) == mod(12, {2, 12}));
}

TEST_CASE("ill-defined morphisms are rejected with the failing entry") {
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  try {
    (void)morph(z2, z4, {{1}});
    FAIL("expected rejection");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("(0,0)") != std::string::npos);
    CHECK(msg.find("d_j=2") != std::string::npos);
    CHECK(msg.find("d_i=4") != std::string::npos);
  }
}

TEST_CASE("hom_group examples") {
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  const auto gens = hom_group(z2, z4);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].entry(0, 0) == 2);
  CHECK(hom_order(z2, z4) == 2);
  // frozen: enumerating all four candidate matrices keeps {0, 2}
  CHECK(oracle::exhaustive_hom_matrices(z2, z4) == std::set<std::vector<std::int64_t>>{{0}, {2}});

  const auto zero = FiniteModule::zero(Ring(4));
  CHECK(hom_group(z4, zero).empty());
  CHECK(hom_order(z4, zero) == 1);

  const auto endo = hom_group(z4, z4);
  REQUIRE(endo.size() == 1);
  CHECK(endo[0] == ModuleMorphism::identity(z4));
  CHECK(hom_order(z4, z4) == 4);
}

TEST_CASE("property: hom_group generates the exhaustive hom set") {
  for (std::int64_t n : {2, 4, 6, 8, 12}) {
    const Ring ring(n);
    const auto mods = rnd::all_modules(ring, 16);
    for (const auto& m : mods)
      for (const auto& t : mods) {
        if (hom_order(m, t) > 4096) continue;
        CHECK(oracle::morphism_span(hom_group(m, t), m, t) == oracle::exhaustive_hom_matrices(m, t));
        CHECK(oracle::exhaustive_hom_matrices(m, t).size() == hom_order(m, t));
      }
  }
}

TEST_CASE("compose examples") {
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  const auto f = morph(z2, z4, {{2}});
  CHECK(compose(ModuleMorphism::identity(z4), f) == f);
  CHECK(compose(ModuleMorphism::zero(z4, z2), f).is_zero());
  const auto p = morph(z4, z2, {{1}});
  CHECK(compose(p, f) == ModuleMorphism::zero(z2, z2));
  CHECK_THROWS_AS((void)compose(f, f), InputError);
}

TEST_CASE("kernel examples") {
  const auto z4 = mod(4, {4});
  CHECK(kernel(ModuleMorphism::identity(z4)).module.is_zero());
  const auto m = mod(4, {2, 4});
  const auto k0 = kernel(ModuleMorphism::zero(m, z4));
  CHECK(k0.module == m);
  CHECK(is_isomorphism(k0.embedding));
  const auto k = kernel(morph(z4, z4, {{2}}));
  CHECK(k.module == mod(4, {2}));
  CHECK(Submodule::image_of(k.embedding).elements() == std::vector<Element>{{0}, {2}});
  CHECK(is_injective(k.embedding));
}

TEST_CASE("cokernel examples") {
  const auto z4 = mod(4, {4});
  CHECK(cokernel(ModuleMorphism::identity(z4)).module.is_zero());
  const auto zero = FiniteModule::zero(Ring(4));
  const auto c0 = cokernel(ModuleMorphism::zero(zero, z4));
  CHECK(c0.module == z4);
  const auto c = cokernel(morph(z4, z4, {{2}}));
  CHECK(c.module == mod(4, {2}));
  CHECK(is_surjective(c.projection));
}

TEST_CASE("property: kernel and cokernel match element counts") {
  rnd::Rng rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{4, 6, 8, 9, 12}));
    const auto m = rnd::module(rng, ring, 64);
    const auto n = rnd::module(rng, ring, 64);
    const auto f = rnd::morphism(rng, m, n);
    std::set<Element> img;
    std::uint64_t zeros = 0;
    for (const auto& x : oracle::all_elements(m)) {
      const auto y = f.apply(x);
      img.insert(y);
      if (y == n.zero_element()) ++zeros;
    }
    const auto k = kernel(f);
    CHECK(k.module.cardinality() == zeros);
    CHECK(compose(f, k.embedding).is_zero());
    CHECK(is_injective(k.embedding));
    const auto c = cokernel(f);
    CHECK(c.module.cardinality() * img.size() == n.cardinality());
    CHECK(compose(c.projection, f).is_zero());
    for (std::size_t i = 0; i < c.generator_lifts.size(); ++i)
      CHECK(c.projection.apply(c.generator_lifts[i]) == c.module.basis(i));
  }
}

TEST_CASE("canonicalization of random presentations is consistent") {
  rnd::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{4, 8, 12}));
    const auto free = FiniteModule::free(ring, static_cast<std::size_t>(rng.uniform(1, 3)));
    const auto src = rnd::module(rng, ring, 64);
    const auto f = rnd::morphism(rng, src, free);
    const auto c1 = cokernel(f);
    // an isomorphic presentation: precompose with an automorphism of the source
    const auto c2 = cokernel(compose(f, ModuleMorphism::identity(src)) + ModuleMorphism::zero(src, free));
    CHECK(c1.module == c2.module);
    std::set<Element> img;
    for (const auto& x : oracle::all_elements(src)) img.insert(f.apply(x));
    CHECK(c1.module.cardinality() * img.size() == free.cardinality());
  }
}

TEST_CASE("pushout examples") {
  const Ring r4(4);
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  const auto z22 = mod(4, {2, 2});
  const auto u = morph(z2, z4, {{2}});
  {
    const auto po = pushout(u, ModuleMorphism::identity(z2));
    CHECK(po.module == z4);
    CHECK(is_isomorphism(po.from_u_target));
  }
  {
    const auto v = morph(z2, z22, {{1}, {0}});
    const auto po = pushout(ModuleMorphism::identity(z2), v);
    CHECK(po.module == z22);
    CHECK(is_isomorphism(po.from_v_target));
  }
  const auto v = morph(z2, z22, {{1}, {0}});
  const auto po = pushout(u, v);
  CHECK(po.module.cardinality() == 8);
  CHECK(compose(po.from_v_target, v) == compose(po.from_u_target, u));
  // universal property: every commuting cone into small Y has exactly one mediator
  for (const auto& y : rnd::all_modules(r4, 8)) {
    for (const auto& a : hom_elements(z22, y))
      for (const auto& b : hom_elements(z4, y)) {
        if (!(compose(a, v) == compose(b, u))) continue;
        int mediators = 0;
        for (const auto& m : hom_elements(po.module, y))
          if (compose(m, po.from_v_target) == a && compose(m, po.from_u_target) == b) ++mediators;
        CHECK(mediators == 1);
        const std::vector<ModuleMorphism> fs{a, b};
        const std::vector<ModuleMorphism> is{po.from_v_target, po.from_u_target};
        CHECK(extend_jointly(fs, is, po.module, y).has_value());
      }
  }
  CHECK_THROWS_AS((void)pushout(u, ModuleMorphism::identity(z4)), InputError);
}

TEST_CASE("directed colimit examples") {
  const auto z2 = mod(4, {2});
  const auto z4 = mod(4, {4});
  const auto m = mod(4, {2, 4});
  CHECK(directed_colimit(DirectedDiagram({m}, {})).module == m);
  const auto id = ModuleMorphism::identity(m);
  const auto chain = DirectedDiagram::chain({m, m, m}, {id, id});
  const auto c = directed_colimit(chain);
  CHECK(c.module == m);
  CHECK(chain.arrows().size() == 3);
  const auto c2 = directed_colimit(DirectedDiagram::chain({z2, z4}, {morph(z2, z4, {{2}})}));
  CHECK(c2.module == z4);
  CHECK(is_isomorphism(c2.structural[1]));
}

TEST_CASE("directed diagrams reject bad shapes") {
  const auto z4 = mod(4, {4});
  const auto id = ModuleMorphism::identity(z4);
  const auto two = morph(z4, z4, {{2}});
  using A = DirectedDiagram::Arrow;
  // two different paths 0 -> 2
  CHECK_THROWS_AS(DirectedDiagram({z4, z4, z4}, {A{0, 1, id}, A{1, 2, id}, A{0, 2, two}}), InputError);
  // no upper bound for 1 and 2
  CHECK_THROWS_AS(DirectedDiagram({z4, z4, z4}, {A{0, 1, id}, A{0, 2, id}}), InputError);
  CHECK_THROWS_AS(DirectedDiagram({z4, z4}, {A{0, 1, id}, A{1, 0, id}}), InputError);
  // a diamond that commutes is fine
  const DirectedDiagram diamond({z4, z4, z4, z4}, {A{0, 1, two}, A{0, 2, id}, A{1, 3, id}, A{2, 3, two}});
  CHECK(directed_colimit(diamond).module == z4);
}

TEST_CASE("property: constant diagrams and joint epimorphism of structural maps") {
  rnd::Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{2, 4, 6, 12}));
    const auto m = rnd::module(rng, ring, 64);
    const auto id = ModuleMorphism::identity(m);
    const auto c = directed_colimit(DirectedDiagram::chain({m, m, m}, {id, id}));
    CHECK(c.module == m);
    // random chain: images of structural maps generate the colimit
    const auto a = rnd::module(rng, ring, 32);
    const auto b = rnd::module(rng, ring, 32);
    const auto f = rnd::morphism(rng, a, b);
    const auto c2 = directed_colimit(DirectedDiagram::chain({a, b}, {f}));
    Submodule gen = Submodule::zero(c2.module);
    for (const auto& s : c2.structural) gen = gen.plus(Submodule::image_of(s));
    CHECK(gen == Submodule::whole(c2.module));
    CHECK(compose(c2.structural[1], f) == c2.structural[0]);
  }
}

TEST_CASE("projectivity examples") {
  CHECK(is_projective(mod(4, {4})));
  CHECK_FALSE(is_projective(mod(4, {2})));
  CHECK(is_projective(canonical_module(Ring(12), {4, 3})));
  CHECK(is_projective(mod(12, {4})));
  CHECK_FALSE(is_projective(mod(12, {6})));
  CHECK(is_projective(FiniteModule::zero(Ring(6))));
  // frozen: Z/4 ->> Z/2 has no section (both maps Z/2 -> Z/4 miss)
  CHECK_FALSE(oracle::factors_through_by_search(ModuleMorphism::identity(mod(4, {2})), mod(4, {4})));
}

TEST_CASE("property: projectivity agrees with splitting of the free cover") {
  for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12, 36}) {
    for (const auto& m : rnd::all_modules(Ring(n), 512)) CHECK(is_projective(m) == free_cover_splits(m));
  }
}

TEST_CASE("purity and summand examples") {
  const auto z4 = mod(4, {4});
  const Submodule two(z4, {{2}});
  CHECK_FALSE(is_pure_submodule(two, z4));
  CHECK_FALSE(is_direct_summand(two, z4).has_value());
  CHECK_FALSE(oracle::summand_by_search(z4, {{2}}));

  const auto m = mod(4, {2, 4});
  const Submodule first(m, {{1, 0}});
  CHECK(is_pure_submodule(first, m));
  const auto sum = is_direct_summand(first, m);
  REQUIRE(sum.has_value());
  CHECK(compose(sum->retraction, sum->inclusion) == ModuleMorphism::identity(sum->module));

  CHECK(is_pure_submodule(Submodule::zero(m), m));
  CHECK(is_pure_submodule(Submodule::whole(m), m));
  const auto whole = is_direct_summand(Submodule::whole(m), m);
  REQUIRE(whole.has_value());
  CHECK(is_isomorphism(whole->retraction));
}

TEST_CASE("pure closure examples") {
  const auto z4 = mod(4, {4});
  const auto c = pure_closure(Submodule(z4, {{2}}), z4);
  CHECK(c.closure == Submodule::whole(z4));
  CHECK(c.witnesses == 1);
  const auto m = mod(4, {2, 4});
  const Submodule first(m, {{1, 0}});
  const auto same = pure_closure(first, m);
  CHECK(same.closure == first);
  CHECK(same.witnesses == 0);
  CHECK(pure_closure(Submodule::zero(m), m).closure.is_zero());
}

TEST_CASE("property: purity, summands and pure closure on random pairs") {
  rnd::Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{2, 3, 4, 6, 8, 9, 12}));
    const auto m = rnd::module(rng, ring, 64, 3);
    const auto s = rnd::submodule(rng, m, 2);
    const bool pure = is_pure_submodule(s, m);
    CHECK(pure == is_direct_summand(s, m).has_value());
    CHECK(pure == oracle::pure_by_elements(m, s.generators()));
    if (hom_order(m, m) <= 4096) CHECK(pure == oracle::summand_by_search(m, s.generators()));
    const auto pc = pure_closure(s, m);
    CHECK(is_pure_submodule(pc.closure, m));
    CHECK(pc.closure.contains(s));
    std::uint64_t bound = s.cardinality();
    for (std::size_t w = 0; w < pc.witnesses; ++w) bound *= static_cast<std::uint64_t>(ring.modulus());
    CHECK(pc.closure.cardinality() <= bound);
    if (pure) CHECK(pc.witnesses == 0);
    CHECK(pure_closure(s, m).closure.generators() == pc.closure.generators());
  }
}

TEST_CASE("submodule intersection and preimage agree with element sets") {
  rnd::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const Ring ring(rng.pick(std::vector<std::int64_t>{4, 6, 12}));
    const auto m = rnd::module(rng, ring, 64, 3);
    const auto a = rnd::submodule(rng, m);
    const auto b = rnd::submodule(rng, m);
    const auto ea = oracle::subgroup(m, a.generators());
    const auto eb = oracle::subgroup(m, b.generators());
    std::set<Element> meet;
    for (const auto& x : ea)
      if (eb.count(x)) meet.insert(x);
    CHECK(oracle::subgroup(m, a.intersect(b).generators()) == meet);
    const auto n = rnd::module(rng, ring, 64, 3);
    const auto f = rnd::morphism(rng, n, m);
    std::set<Element> pre;
    for (const auto& x : oracle::all_elements(n))
      if (ea.count(f.apply(x))) pre.insert(x);
    CHECK(oracle::subgroup(n, preimage(f, a).generators()) == pre);
    CHECK(a.cardinality() == ea.size());
  }
}

TEST_CASE("direct sums keep block order when already canonical") {
  const auto z2 = mod(4, {2});
  const auto ds = direct_sum({z2, z2});
  CHECK(ds.module == mod(4, {2, 2}));
  CHECK(ds.injections[0].matrix() == ResidueMatrix{{1}, {0}});
  CHECK(ds.injections[1].matrix() == ResidueMatrix{{0}, {1}});
  const auto mixed = direct_sum({mod(12, {4}), mod(12, {3})});
  CHECK(mixed.module == mod(12, {12}));
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(compose(mixed.projections[k], mixed.injections[k]) ==
          ModuleMorphism::identity(mixed.injections[k].source()));
  }
  CHECK(compose(mixed.projections[0], mixed.injections[1]).is_zero());
}
