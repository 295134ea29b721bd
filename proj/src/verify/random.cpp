#include "phant/verify/random.hpp"

#include "phant/errors.hpp"
#include "phant/ideals.hpp"
#include "phant/purity.hpp"

namespace phant::rnd {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t z = base;
  for (std::uint64_t v : {a, b, c}) {
    z += 0x9e3779b97f4a7c15ULL + v;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
  }
  return z;
}

std::vector<FiniteModule> all_modules(const Ring& ring, std::uint64_t max_card) {
  return enumerate_modules(ring, max_card);
}

FiniteModule module(Rng& rng, const Ring& ring, std::uint64_t max_card, std::size_t max_rank) {
  std::vector<std::int64_t> divs;
  for (auto d : ring.divisors())
    if (d > 1) divs.push_back(d);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto rank = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_rank)));
    std::vector<std::int64_t> orders;
    for (std::size_t i = 0; i < rank; ++i) orders.push_back(rng.pick(divs));
    FiniteModule m = canonical_module(ring, orders);
    if (m.cardinality() <= max_card) return m;
  }
  return FiniteModule::zero(ring);
}

FiniteModule nonzero_module(Rng& rng, const Ring& ring, std::uint64_t max_card, std::size_t max_rank) {
  if (max_card < 2) throw InputError("nonzero_module: bound too small");
  for (int attempt = 0; attempt < 64; ++attempt) {
    FiniteModule m = module(rng, ring, max_card, std::max<std::size_t>(max_rank, 1));
    if (!m.is_zero()) return m;
  }
  return FiniteModule(ring, {ring.factorization().front().prime});
}

FiniteModule projective_module(Rng& rng, const Ring& ring, std::uint64_t max_card, std::size_t max_rank) {
  std::vector<std::int64_t> locals;
  for (const auto& pp : ring.factorization()) locals.push_back(pp.value);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto rank = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_rank)));
    std::vector<std::int64_t> orders;
    for (std::size_t i = 0; i < rank; ++i) orders.push_back(rng.coin(30) ? ring.modulus() : rng.pick(locals));
    FiniteModule m = canonical_module(ring, orders);
    if (m.cardinality() <= max_card) return m;
  }
  return FiniteModule::zero(ring);
}

ModuleMorphism morphism(Rng& rng, const FiniteModule& source, const FiniteModule& target) {
  ResidueMatrix a(target.rank(), source.rank());
  for (std::size_t i = 0; i < target.rank(); ++i)
    for (std::size_t j = 0; j < source.rank(); ++j) {
      const std::int64_t g = gcd64(source.factor(j), target.factor(i));
      a(i, j) = rng.uniform(0, g - 1) * hom_step(source.factor(j), target.factor(i));
    }
  return ModuleMorphism(source, target, std::move(a));
}

Element element(Rng& rng, const FiniteModule& m) {
  Element x(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) x[i] = rng.uniform(0, m.factor(i) - 1);
  return x;
}

Submodule submodule(Rng& rng, const FiniteModule& m, std::size_t max_gens) {
  const auto count = rng.uniform(0, static_cast<std::int64_t>(max_gens));
  std::vector<Element> gens;
  for (std::int64_t k = 0; k < count; ++k) {
    Element x = element(rng, m);
    // Bias towards sparse elements so summands show up often.
    for (auto& v : x)
      if (rng.coin(40)) v = 0;
    gens.push_back(std::move(x));
  }
  return Submodule(m, std::move(gens));
}

ModuleMorphism phantom_morphism(Rng& rng, const FiniteModule& source, const FiniteModule& target) {
  ModuleMorphism f = ModuleMorphism::zero(source, target);
  const int terms = static_cast<int>(rng.uniform(1, 2));
  for (int t = 0; t < terms; ++t) {
    const auto p = projective_module(rng, source.ring(), 4 * static_cast<std::uint64_t>(source.modulus()), 2);
    f = f + compose(morphism(rng, p, target), morphism(rng, source, p));
  }
  return f;
}

ModuleMorphism non_phantom_morphism(Rng& rng, const FiniteModule& source, const FiniteModule& target, int attempts) {
  for (int k = 0; k < attempts; ++k) {
    ModuleMorphism f = morphism(rng, source, target);
    if (!factors_through_projective(f)) return f;
  }
  return ModuleMorphism::zero(source, target);
}

ModuleMorphism uniform_phantom(Rng& rng, const FiniteModule& source, const FiniteModule& target) {
  const auto pi = free_cover(target);
  return compose(pi, morphism(rng, source, pi.source()));
}

FiniteModule sized_module(Rng& rng, const Ring& ring, std::uint64_t max_card) {
  std::vector<std::int64_t> divs;
  for (auto d : ring.divisors())
    if (d > 1) divs.push_back(d);
  std::uint64_t cap = 1;
  const auto steps = rng.uniform(0, 12);
  for (std::int64_t i = 0; i < steps && cap <= max_card / 2; ++i) cap *= 2;
  std::vector<std::int64_t> orders;
  std::uint64_t card = 1;
  for (int tries = 0; tries < 8; ++tries) {
    const auto d = static_cast<std::uint64_t>(rng.pick(divs));
    if (card * d > cap) continue;
    card *= d;
    orders.push_back(static_cast<std::int64_t>(d));
  }
  return canonical_module(ring, orders);
}

RepA2 phantom_rep(std::uint64_t seed, const Ring& ring, std::uint64_t size_bound) {
  if (size_bound < 2) return RepA2::zero(ring);
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(ring.modulus()), size_bound));
  const std::uint64_t half = size_bound / 2;
  const auto m2 = sized_module(rng, ring, half);
  const std::uint64_t room = size_bound - m2.cardinality();
  const auto kind = rng.uniform(0, 3);
  if (kind == 0) {
    const auto p = projective_module(rng, ring, room, 4);
    return RepA2(morphism(rng, p, m2));
  }
  const auto m1 = sized_module(rng, ring, room);
  RepA2 rep(kind == 1 ? phantom_morphism(rng, m1, m2) : uniform_phantom(rng, m1, m2));
  if (kind == 3 && !rep.is_zero()) {
    // quotients by pure subrepresentations stay phantom
    const auto x1 = submodule(rng, rep.m1(), 1);
    auto s1 = pure_closure(x1, rep.m1()).closure;
    auto s2 = pure_closure(image(rep.map(), s1).plus(submodule(rng, rep.m2(), 1)), rep.m2()).closure;
    rep = quotient_rep(SubRep(rep, std::move(s1), std::move(s2))).rep;
  }
  return rep;
}

}  // namespace phant::rnd
