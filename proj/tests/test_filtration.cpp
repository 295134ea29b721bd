#include <doctest.h>

#include "phant/filtration.hpp"
#include "phant/purity.hpp"
#include "phant/verify/random.hpp"
#include "test_support.hpp"

using namespace phant;
using phant::testing::mod;
using phant::testing::morph;

namespace {

RepA2 doubling(std::size_t rank) {
  const auto free = FiniteModule::free(Ring(4), rank);
  ResidueMatrix a = ResidueMatrix::identity(rank);
  for (std::size_t i = 0; i < rank; ++i) a(i, i) = 2;
  return RepA2(ModuleMorphism(free, free, std::move(a)));
}

}  // namespace

TEST_CASE("pure_subrep_containing examples") {
  const FiltrationConfig cfg{4};
  const auto f = doubling(2);
  const auto zero = pure_subrep_containing(f, Submodule::zero(f.m1()), Submodule::zero(f.m2()), cfg);
  CHECK(zero.sub == SubRep::zero(f));
  CHECK(zero.adjoined == 0);
  const auto all = pure_subrep_containing(f, Submodule::whole(f.m1()), Submodule::whole(f.m2()), cfg);
  CHECK(all.sub == SubRep::whole(f));

  const auto z4 = mod(4, {4});
  const RepA2 g(morph(mod(4, {4, 4}), z4, {{2, 0}}));
  const auto s = pure_subrep_containing(g, Submodule(g.m1(), {{1, 0}}), Submodule::zero(z4), cfg);
  CHECK(s.sub.first() == Submodule(g.m1(), {{1, 0}}));
  CHECK(s.sub.second() == Submodule::whole(z4));
  CHECK(is_pure_subrep(s.sub));
  CHECK(s.within_budget);
  CHECK_THROWS_AS((void)pure_subrep_containing(g, Submodule::zero(g.m1()), Submodule::zero(z4), FiltrationConfig{3}),
                  InputError);
}

TEST_CASE("phantom_pure_subrep examples") {
  const FiltrationConfig cfg{4};
  const auto f = doubling(2);
  const auto zero = phantom_pure_subrep(f, Submodule::zero(f.m1()), Submodule::zero(f.m2()), cfg);
  CHECK(zero.sub == SubRep::zero(f));
  const auto e1 = phantom_pure_subrep(f, Submodule(f.m1(), {{1, 0}}), Submodule::zero(f.m2()), cfg);
  CHECK(is_pure_subrep(e1.sub));
  CHECK(e1.sub.first().contains(Element{1, 0}));
  CHECK(is_phantom(restrict(e1.sub).rep.map()));
  CHECK(e1.sub.second() == Submodule(f.m2(), {{1, 0}}));

  const RepA2 small(morph(mod(4, {4}), mod(4, {2}), {{1}}));
  const auto whole = phantom_pure_subrep(small, Submodule::whole(small.m1()), Submodule::zero(small.m2()),
                                         FiltrationConfig{64});
  CHECK(whole.sub == SubRep::whole(small));
  CHECK_THROWS_AS((void)phantom_pure_subrep(RepA2(ModuleMorphism::identity(mod(4, {2}))),
                                            Submodule::zero(mod(4, {2})), Submodule::zero(mod(4, {2})), cfg),
                  InputError);
}

TEST_CASE("build_filtration examples") {
  const auto small = RepA2(morph(mod(4, {4}), mod(4, {2}), {{1}}));
  const auto single = build_filtration(small, FiltrationConfig{8});
  CHECK(single.steps.size() == 2);
  CHECK(verify_filtration(single).passed());

  const auto zero = build_filtration(RepA2::zero(Ring(4)), FiltrationConfig{4});
  CHECK(zero.steps.size() == 1);
  CHECK(verify_filtration(zero).passed());

  const auto f = doubling(3);
  const auto chain = build_filtration(f, FiltrationConfig{4});
  CHECK(chain.steps.size() - 1 >= 3);
  const auto report = verify_filtration(chain);
  CHECK(report.passed());
  for (const auto& size : report.sizes) {
    CHECK(size.first <= size.bound);
    CHECK(size.second <= size.bound);
  }
  CHECK_THROWS_AS((void)build_filtration(RepA2(ModuleMorphism::identity(mod(4, {2}))), FiltrationConfig{4}),
                  InputError);
}

TEST_CASE("verify_filtration catches corrupted chains") {
  const auto f = doubling(2);
  auto good = build_filtration(f, FiltrationConfig{4});
  REQUIRE(verify_filtration(good).passed());

  auto impure = good;
  impure.steps.insert(impure.steps.begin() + 1,
                      SubRep(f, Submodule::zero(f.m1()), Submodule(f.m2(), {{2, 0}})));
  impure.adjoined.insert(impure.adjoined.begin(), 0);
  const auto r = verify_filtration(impure);
  CHECK_FALSE(r.pure.passed);
  REQUIRE(r.pure.failing_index.has_value());
  CHECK(*r.pure.failing_index == 1);

  auto no_base = good;
  no_base.steps.erase(no_base.steps.begin());
  CHECK_FALSE(verify_filtration(no_base).zero_base.passed);

  auto short_chain = good;
  short_chain.steps.pop_back();
  CHECK_FALSE(verify_filtration(short_chain).chain.passed);

  auto repeated = good;
  repeated.steps.insert(repeated.steps.begin() + 1, repeated.steps[1]);
  repeated.adjoined.insert(repeated.adjoined.begin(), 0);
  CHECK_FALSE(verify_filtration(repeated).strict_growth.passed);

  const Filtration trivial{f, 1024, {SubRep::zero(f), SubRep::whole(f)}, {0}};
  CHECK(verify_filtration(trivial).passed());
  const Filtration tight{f, 4, {SubRep::zero(f), SubRep::whole(f)}, {0}};
  CHECK_FALSE(verify_filtration(tight).size_bound.passed);

  // a non-phantom quotient step
  const auto id2 = RepA2(ModuleMorphism::identity(mod(4, {2})));
  const Filtration bad{id2, 8, {SubRep::zero(id2), SubRep::whole(id2)}, {0}};
  CHECK_FALSE(verify_filtration(bad).quotient_phantom.passed);
}

TEST_CASE("random phantom reps are deterministic and phantom") {
  const Ring r4(4);
  CHECK(rnd::phantom_rep(42, r4, 64) == rnd::phantom_rep(42, r4, 64));
  CHECK(rnd::phantom_rep(7, r4, 1).is_zero());
  for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto rep = rnd::phantom_rep(seed, Ring(n), 4096);
      CHECK(rep.cardinality() <= 4096);
      CHECK(is_phantom(rep.map()));
    }
  }
}

TEST_CASE("property: quotients of phantom reps by pure subreps are phantom") {
  rnd::Rng rng(61);
  for (std::int64_t n : {4, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto rep = rnd::phantom_rep(rng.next(), Ring(n), 512);
      const auto s = pure_subrep_containing(rep, rnd::submodule(rng, rep.m1(), 2), rnd::submodule(rng, rep.m2(), 1),
                                            FiltrationConfig{static_cast<std::uint64_t>(n)});
      REQUIRE(is_pure_subrep(s.sub));
      CHECK(is_phantom(quotient_rep(s.sub).rep.map()));
      // idempotent on its own output
      const auto again = pure_subrep_containing(rep, s.sub.first(), s.sub.second(),
                                                FiltrationConfig{static_cast<std::uint64_t>(n)});
      CHECK(again.sub == s.sub);
      CHECK(again.adjoined == 0);
    }
  }
}

TEST_CASE("property: filtrations of sampled phantom reps verify") {
  for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12}) {
    const Ring ring(n);
    for (std::uint64_t seed = 100; seed < 106; ++seed) {
      const auto rep = rnd::phantom_rep(seed, ring, 1024);
      const auto un = static_cast<std::uint64_t>(n);
      for (const std::uint64_t kappa : {un, 2 * un, std::max(un, rep.cardinality())}) {
        const auto filt = build_filtration(rep, FiltrationConfig{kappa});
        const auto report = verify_filtration(filt);
        CHECK(report.passed());
      }
    }
  }
}
